use clap::{Args, Parser, Subcommand, ValueEnum};
use homoggb_core::parse::collect_variables;
use homoggb_core::{ring_ref, Field, Ring, RingKind, RingRef};

use crate::output::Failure;

#[derive(Parser, Debug)]
#[command(name = "homoggb", version, about = "Groebner bases through homogenization")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Homogenize each input polynomial.
    Homogenize,
    /// Set the homogenizing variable to 1 (delete it, for free algebras).
    Dehomogenize,
    /// Groebner basis of the input ideal.
    Gb,
    /// Basis of I via the basis of the ideal generated by the homogenized inputs.
    PipelineCentral,
    /// The same procedure in a free algebra, with commutators for the new letter.
    PipelineFree,
    /// Monomials outside the leading-monomial ideal, degree by degree.
    NormalMonomials,
    /// Check whether the input is a Groebner basis.
    CheckGb,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingArg {
    Comm,
    Free,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderArg {
    Grlex,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Commutative polynomial ring or free associative algebra.
    #[arg(long, value_enum, global = true, default_value = "comm")]
    pub ring: RingArg,
    /// Comma-separated variable names; inferred from the input when absent.
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Comma-separated positive weights, one per variable.
    #[arg(long, global = true, value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,
    /// Variables from greatest to least; defaults to the variable list.
    #[arg(long, global = true, value_delimiter = ',')]
    pub var_order: Option<Vec<String>>,
    #[arg(long, value_enum, global = true, default_value = "grlex")]
    pub order: OrderArg,
    /// `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Name of the homogenizing variable (default t, or T for free algebras).
    #[arg(long, global = true)]
    pub homog_var: Option<String>,
    /// Degree bound for free-algebra completions.
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    /// Interreduce the basis.
    #[arg(long, global = true)]
    pub reduced: bool,
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Append the commutators X*T - T*X when homogenizing in a free algebra.
    #[arg(long, global = true)]
    pub emit_commutators: bool,
    /// Highest degree listed by normal-monomials.
    #[arg(long, global = true)]
    pub up_to: Option<u32>,
    /// normal-monomials: also list the homogenized ideal's normal monomials
    /// and check that they are powers of the homogenizing variable times
    /// the base ones.
    #[arg(long, global = true)]
    pub correspondence: bool,
}

impl Opts {
    pub fn kind(&self) -> RingKind {
        match self.ring {
            RingArg::Comm => RingKind::Commutative,
            RingArg::Free => RingKind::Free,
        }
    }

    pub fn homog_name(&self) -> String {
        self.homog_var.clone().unwrap_or_else(|| match self.ring {
            RingArg::Comm => "t".into(),
            RingArg::Free => "T".into(),
        })
    }

    pub fn max_degree(&self, command: &str) -> Result<u32, Failure> {
        self.max_degree
            .ok_or_else(|| Failure::Usage(format!("{command} over a free algebra requires --max-degree")))
    }

    /// The base ring described by the flags, with variables taken from the
    /// input when `--vars` is absent.
    pub fn base_ring(&self, input: &str) -> Result<RingRef, Failure> {
        let homog = self.homog_name();
        let vars = match &self.vars {
            Some(v) => v.clone(),
            None => collect_variables(input, Some(&homog)),
        };
        if vars.is_empty() {
            return Err(Failure::Usage("no variables given or found in the input".into()));
        }
        let field: Field = self.field.parse()?;
        let mut ring = Ring::new(self.kind(), &vars, field)?;
        if let Some(w) = &self.weights {
            ring = ring.with_weights(w)?;
        }
        if let Some(order) = &self.var_order {
            ring = ring.with_precedence(order)?;
        }
        Ok(ring_ref(ring))
    }
}
