"""Smoke test for the homoggb extension module.

Build and install first:  maturin build -m crates/python/Cargo.toml --release
then pip install the wheel from target/wheels/.
"""

import homoggb


def central():
    r = homoggb.PolyRing(["x", "y"])
    s = [r.parse("y^3 - x - y"), r.parse("y^2 + 1")]
    p = homoggb.pipeline_central(s)
    assert p.step1.strings() == ["y^2 + t^2", "t^2*x + 2*t^2*y"], p.step1
    assert p.step2.strings() == ["y^2 + 1", "x + 2*y"], p.step2
    assert p.step3.strings() == ["y^2 + t^2", "x + 2*y"], p.step3
    assert p.step2_verified and p.step3_verified and not p.unit

    g = homoggb.groebner_basis(s)
    assert g.strings() == p.step2.strings()
    assert str(g.normal_form(r.parse("x*y"))) == "2"
    assert g.normal_monomials(2) == [["1"], ["y"], []]

    ok, rem = homoggb.is_groebner([r.parse("y^2 + 1"), r.parse("y^3 - x - y")])
    assert not ok and str(rem) == "x + 2*y"

    f = r.parse("x^2 + y + 1")
    (fh,) = homoggb.homogenize([f])
    assert str(fh) == "x^2 + t*y + t^2" and fh.is_homogeneous()
    assert homoggb.dehomogenize([fh])[0] == f
    assert str((f - f) * f) == "0" and (f ** 2).degree() == 4


def free():
    r = homoggb.PolyRing(["X", "Y"], kind="free")
    s = [r.parse("Y*Y*Y - X*Y - X - Y"), r.parse("Y^2 - X + 3")]
    p = homoggb.pipeline_free(s, max_degree=8)
    assert p.step2.strings() == ["Y^2 + 4*Y + 3", "X + 4*Y"], p.step2
    assert p.step1_verified and p.step2_verified and p.step3_verified
    assert p.step2.truncated_at == 8

    h = homoggb.homogenize([r.parse("Y^2 - X + 3")], commutators=True)
    assert [str(q) for q in h] == ["Y^2 - T*X + 3*T^2", "X*T - T*X", "Y*T - T*Y"]

    xy = r.parse("X") * r.parse("Y")
    assert str(xy - r.parse("Y") * r.parse("X")) == "X*Y - Y*X"


def prime_field():
    r = homoggb.PolyRing(["x"], field="fp:7")
    assert homoggb.groebner_basis([r.parse("3*x - 1")]).strings() == ["x + 2"]
    try:
        r.parse("x + q")
    except ValueError as e:
        assert "unknown variable q" in str(e)
    else:
        raise AssertionError("parse should fail")


central()
free()
prime_field()
print("python smoke test: ok")
