use homoggb_core::gb::commutative::{buchberger, complete, is_groebner};
use homoggb_core::gb::free::{is_nc_groebner, nc_complete, nc_reduce_basis, NcOptions};
use homoggb_core::normal::{check_normal_correspondence, normal_monomials, CorrespondenceReport};
use homoggb_core::parse::parse_system;
use homoggb_core::pipeline::{gb_via_central_homogenization, gb_via_nc_homogenization, inclusion_witness};
use homoggb_core::{
    CentralHomogenizer, CommPoly, FreePoly, GroebnerBasis, Monomial, NoncentralHomogenizer, NormalSet,
    Polynomial, RingKind, RingRef, Word,
};
use serde_json::{json, Value};

use crate::config::{Cli, Command, Opts};
use crate::output::{basis_json, ring_json, strings, truncation_lines, Failure, Output};

pub fn run(cli: &Cli, input: &str) -> Result<Output, Failure> {
    let opts = &cli.opts;
    let base = opts.base_ring(input)?;
    let kind = base.kind();
    match (cli.command, kind) {
        (Command::Homogenize, RingKind::Commutative) => homogenize_comm(opts, &base, input),
        (Command::Homogenize, RingKind::Free) => homogenize_free(opts, &base, input),
        (Command::Dehomogenize, RingKind::Commutative) => {
            let h = CentralHomogenizer::new(&base, &opts.homog_name())?;
            dehomogenize(&h, input)
        }
        (Command::Dehomogenize, RingKind::Free) => {
            let h = NoncentralHomogenizer::new(&base, &opts.homog_name())?;
            dehomogenize(&h, input)
        }
        (Command::Gb, RingKind::Commutative) => gb_comm(opts, &base, input),
        (Command::Gb, RingKind::Free) => gb_free(opts, &base, input),
        (Command::PipelineCentral, RingKind::Commutative) => pipeline_central(opts, &base, input),
        (Command::PipelineFree, RingKind::Free) => pipeline_free(opts, &base, input),
        (Command::PipelineCentral, RingKind::Free) => {
            Err(Failure::Usage("pipeline-central needs --ring comm".into()))
        }
        (Command::PipelineFree, RingKind::Commutative) => {
            Err(Failure::Usage("pipeline-free needs --ring free".into()))
        }
        (Command::NormalMonomials, RingKind::Commutative) => normal_comm(opts, &base, input),
        (Command::NormalMonomials, RingKind::Free) => normal_free(opts, &base, input),
        (Command::CheckGb, RingKind::Commutative) => check_comm(&base, input),
        (Command::CheckGb, RingKind::Free) => check_free(opts, &base, input),
    }
}

fn read<M: Monomial>(ring: &RingRef, input: &str) -> Result<Vec<Polynomial<M>>, Failure> {
    let sys = parse_system::<M>(ring, input)?;
    for line in &sys.zero_lines {
        eprintln!("warning: line {line} is zero; skipped");
    }
    Ok(sys.polys)
}

fn read_nonempty<M: Monomial>(ring: &RingRef, input: &str) -> Result<Vec<Polynomial<M>>, Failure> {
    let polys = read(ring, input)?;
    if polys.is_empty() {
        return Err(Failure::Usage("input contains no nonzero polynomial".into()));
    }
    Ok(polys)
}

fn listing(command: &str, ring: &RingRef, polys: Vec<String>) -> Output {
    let json = json!({ "command": command, "ring": ring_json(ring), "polynomials": polys });
    Output { text: polys_or_blank(polys), json, failed: false }
}

fn polys_or_blank(polys: Vec<String>) -> Vec<String> {
    if polys.is_empty() {
        vec!["# empty".into()]
    } else {
        polys
    }
}

fn homogenize_comm(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let h = CentralHomogenizer::new(base, &opts.homog_name())?;
    let polys: Vec<CommPoly> = read(base, input)?;
    let out = polys.iter().map(|f| h.central_homogenize(f)).collect::<Result<Vec<_>, _>>()?;
    Ok(listing("homogenize", h.ext(), strings(&out)))
}

fn homogenize_free(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let h = NoncentralHomogenizer::new(base, &opts.homog_name())?;
    let polys: Vec<FreePoly> = read(base, input)?;
    let out = if opts.emit_commutators {
        h.nc_homogenize_set(&polys)?
    } else {
        polys.iter().map(|f| h.nc_homogenize(f)).collect::<Result<Vec<_>, _>>()?
    };
    Ok(listing("homogenize", h.ext(), strings(&out)))
}

fn dehomogenize<M: Monomial>(h: &homoggb_core::Homogenizer<M>, input: &str) -> Result<Output, Failure> {
    let polys: Vec<Polynomial<M>> = read(h.ext(), input)?;
    let out = polys.iter().map(|f| h.dehomogenize(f)).collect::<Result<Vec<_>, _>>()?;
    Ok(listing("dehomogenize", h.base(), strings(&out)))
}

fn basis_output<M: Monomial>(command: &str, g: &GroebnerBasis<M>) -> Output {
    let mut text = polys_or_blank(g.to_strings());
    text.extend(truncation_lines(g));
    let mut json = basis_json(g);
    json["command"] = json!(command);
    json["ring"] = ring_json(g.ring());
    Output { text, json, failed: false }
}

fn gb_comm(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let polys: Vec<CommPoly> = read_nonempty(base, input)?;
    let g = if opts.reduced { buchberger(&polys)? } else { complete(&polys)? };
    Ok(basis_output("gb", &g))
}

fn free_basis(opts: &Opts, polys: &[FreePoly], bound: u32) -> Result<GroebnerBasis<Word>, Failure> {
    let g = nc_complete(polys, bound, NcOptions { interreduce: opts.reduced })?;
    Ok(if opts.reduced { nc_reduce_basis(&g) } else { g })
}

fn gb_free(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let bound = opts.max_degree("gb")?;
    let polys: Vec<FreePoly> = read_nonempty(base, input)?;
    Ok(basis_output("gb", &free_basis(opts, &polys, bound)?))
}

fn section<M: Monomial>(text: &mut Vec<String>, name: &str, g: &GroebnerBasis<M>) {
    text.push(format!("# {name}"));
    text.extend(g.to_strings());
}

fn pipeline_central(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let h = CentralHomogenizer::new(base, &opts.homog_name())?;
    let polys: Vec<CommPoly> = read_nonempty(base, input)?;
    let p = gb_via_central_homogenization(&polys, &h)?;
    let witness = inclusion_witness(&p.step1, p.step3.elements()).map(|w| w.to_string());
    let mut text = Vec::new();
    section(&mut text, "step1", &p.step1);
    section(&mut text, "step2", &p.step2);
    section(&mut text, "step3", &p.step3);
    text.push(format!("#unit: {}", p.unit));
    text.push(format!("#step2-verified: {}", p.step2_verified));
    text.push(format!("#step3-verified: {}", p.step3_verified));
    text.push(format!("#not-in-step1: {}", witness.as_deref().unwrap_or("none")));
    let json = json!({
        "command": "pipeline-central",
        "ring": ring_json(h.ext()),
        "step1": basis_json(&p.step1),
        "step2": basis_json(&p.step2),
        "step3": basis_json(&p.step3),
        "unit": p.unit,
        "step2_verified": p.step2_verified,
        "step3_verified": p.step3_verified,
        "not_in_step1": witness,
    });
    let failed = !(p.step2_verified && p.step3_verified);
    Ok(Output { text, json, failed })
}

fn pipeline_free(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let bound = opts.max_degree("pipeline-free")?;
    let h = NoncentralHomogenizer::new(base, &opts.homog_name())?;
    let polys: Vec<FreePoly> = read_nonempty(base, input)?;
    let p = gb_via_nc_homogenization(&polys, &h, bound)?;
    let witness = inclusion_witness(&p.step1, p.step3.elements()).map(|w| w.to_string());
    let mut text = Vec::new();
    section(&mut text, "step1", &p.step1);
    section(&mut text, "step2", &p.step2);
    section(&mut text, "step3", &p.step3);
    text.push(format!("#unit: {}", p.unit));
    text.push(format!("#step1-verified: {}", p.step1_verified));
    text.push(format!("#step2-verified: {}", p.step2_verified));
    text.push(format!("#step3-verified: {}", p.step3_verified));
    text.push(format!("#not-in-step1: {}", witness.as_deref().unwrap_or("none")));
    text.push(format!("#complete: {}", p.is_complete()));
    text.push(format!("#truncated-at: {bound}"));
    let json = json!({
        "command": "pipeline-free",
        "ring": ring_json(h.ext()),
        "step1": basis_json(&p.step1),
        "step2": basis_json(&p.step2),
        "step3": basis_json(&p.step3),
        "unit": p.unit,
        "step1_verified": p.step1_verified,
        "step2_verified": p.step2_verified,
        "step3_verified": p.step3_verified,
        "not_in_step1": witness,
        "complete": p.is_complete(),
        "truncated_at": bound,
    });
    let failed = !(p.step1_verified && p.step2_verified && p.step3_verified);
    Ok(Output { text, json, failed })
}

fn up_to(opts: &Opts) -> Result<u32, Failure> {
    opts.up_to.ok_or_else(|| Failure::Usage("normal-monomials requires --up-to".into()))
}

fn normal_text<M: Monomial>(text: &mut Vec<String>, label: &str, n: &NormalSet<M>) {
    for d in 0..=n.bound() {
        text.push(format!("# {label}degree {d}"));
        text.extend(n.render_degree(d));
    }
    let counts: Vec<String> = n.counts().iter().map(|c| c.to_string()).collect();
    text.push(format!("#{label}counts: {}", counts.join(" ")));
}

fn normal_json<M: Monomial>(n: &NormalSet<M>) -> Value {
    let degrees: Vec<Vec<String>> = (0..=n.bound()).map(|d| n.render_degree(d)).collect();
    json!({ "ring": ring_json(n.ring()), "degrees": degrees, "counts": n.counts() })
}

fn normal_output<M: Monomial>(
    base: &NormalSet<M>,
    ext: Option<(&NormalSet<M>, CorrespondenceReport)>,
) -> Output {
    let mut text = Vec::new();
    normal_text(&mut text, "", base);
    let mut json = json!({ "command": "normal-monomials", "normal_monomials": normal_json(base) });
    let mut failed = false;
    if let Some((n, rep)) = ext {
        normal_text(&mut text, "extended ", n);
        text.push(format!("#correspondence: {}", rep.holds));
        if let Some((d, m)) = &rep.first_mismatch {
            text.push(format!("#first-mismatch: degree {d} {m}"));
        }
        json["extended"] = normal_json(n);
        json["correspondence"] = json!(rep.holds);
        json["first_mismatch"] = json!(rep.first_mismatch);
        failed = !rep.holds;
    }
    Output { text, json, failed }
}

fn normal_comm(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let d = up_to(opts)?;
    let polys: Vec<CommPoly> = read_nonempty(base, input)?;
    if !opts.correspondence {
        return Ok(normal_output(&normal_monomials(&buchberger(&polys)?, d)?, None));
    }
    let h = CentralHomogenizer::new(base, &opts.homog_name())?;
    let p = gb_via_central_homogenization(&polys, &h)?;
    let nb = normal_monomials(&p.step2, d)?;
    let ne = normal_monomials(&p.step3, d)?;
    let rep = check_normal_correspondence(&nb, &ne)?;
    Ok(normal_output(&nb, Some((&ne, rep))))
}

fn normal_free(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let d = up_to(opts)?;
    let bound = opts.max_degree.unwrap_or(d);
    let polys: Vec<FreePoly> = read_nonempty(base, input)?;
    if !opts.correspondence {
        let g = free_basis(opts, &polys, bound)?;
        return Ok(normal_output(&normal_monomials(&g, d)?, None));
    }
    let h = NoncentralHomogenizer::new(base, &opts.homog_name())?;
    let p = gb_via_nc_homogenization(&polys, &h, bound)?;
    let nb = normal_monomials(&p.step2, d)?;
    let ne = normal_monomials(&p.step3, d)?;
    let rep = check_normal_correspondence(&nb, &ne)?;
    Ok(normal_output(&nb, Some((&ne, rep))))
}

fn check_output(ring: &RingRef, ok: bool, witness: Option<(String, String)>) -> Output {
    let mut text = vec![format!("#groebner: {ok}")];
    if let Some((at, rem)) = &witness {
        text.push(format!("#witness: {at}"));
        text.push(format!("#remainder: {rem}"));
    }
    let json = json!({
        "command": "check-gb",
        "ring": ring_json(ring),
        "is_groebner": ok,
        "witness": witness.map(|(at, rem)| json!({ "at": at, "remainder": rem })),
    });
    Output { text, json, failed: !ok }
}

fn check_comm(base: &RingRef, input: &str) -> Result<Output, Failure> {
    let polys: Vec<CommPoly> = read(base, input)?;
    let c = is_groebner(&polys)?;
    let witness = c.witness.map(|w| {
        let (i, j) = w.pair;
        (format!("S({}, {})", polys[i], polys[j]), w.remainder.to_string())
    });
    Ok(check_output(base, c.is_groebner, witness))
}

fn check_free(opts: &Opts, base: &RingRef, input: &str) -> Result<Output, Failure> {
    let bound = opts.max_degree("check-gb")?;
    let polys: Vec<FreePoly> = read(base, input)?;
    let c = is_nc_groebner(&polys, bound)?;
    let witness = c.witness.map(|w| {
        let ob = &w.obstruction;
        (
            format!("overlap {} of {} and {}", ob.word.render(base), polys[ob.i], polys[ob.j]),
            w.remainder.to_string(),
        )
    });
    Ok(check_output(base, c.is_groebner, witness))
}
