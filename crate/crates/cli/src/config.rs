use std::path::PathBuf;
use std::sync::Arc;

use btquot::algebra::{FieldCtx, Place, Poly};
use btquot::quotient::Variant;
use btquot::upsilon::DEFAULT_BUDGET;
use btquot::verify::DEFAULT_SEED;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "btq",
    version,
    about = "Quotient graphs of PGL2 over F_q[t] on Bruhat-Tits trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the closed-form quotient graph up to a window.
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        window: Option<u32>,
        #[arg(long, value_enum, default_value = "gamma")]
        variant: VariantArg,
    },
    /// Compare every closed form with the brute-force oracle.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        window: Option<u32>,
        /// Also compare oracle counts across every irreducible of degree d.
        #[arg(long)]
        f_independence: bool,
    },
    /// Enumerate Upsilon(n, m) and count its cosets.
    Cosets {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Orbits of PGL2(F_q) on the projective line over F_(q^d).
    Orbits {
        #[command(flatten)]
        common: Common,
    },
    /// Tree distance between the base vertex and its image under a matrix.
    Distance {
        #[command(flatten)]
        common: Common,
        /// A matrix such as "[[1,0],[0,t^2+t+1]]".
        #[arg(long)]
        matrix: String,
    },
    /// Monic irreducible polynomials of degree d.
    Irreducibles {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long)]
    pub d: u32,
    /// Monic irreducible of degree d; defaults to the first one.
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Largest candidate-tuple count a single enumeration may scan.
    #[arg(long, env = "BTQ_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Gamma,
    GammaTilde,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Gamma => Variant::Gamma,
            VariantArg::GammaTilde => Variant::GammaTilde,
        }
    }
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: Arc<FieldCtx>,
    pub q: u64,
    pub d: u32,
    pub f: Option<Poly>,
    pub window: u32,
    pub variant: Variant,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub budget: u128,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_common(
        common: &Common,
        window: Option<u32>,
        variant: Variant,
    ) -> Result<Self, CliError> {
        if common.d == 0 {
            return Err(CliError::Usage("--d must be at least 1".into()));
        }
        let field = Arc::new(FieldCtx::new(common.q)?);
        let f = match &common.f {
            Some(s) => {
                let f = Poly::parse(s, &field)?;
                if f.degree().finite() != Some(common.d as usize) {
                    return Err(CliError::Usage(format!(
                        "--f {s} does not have degree {}",
                        common.d
                    )));
                }
                Some(f)
            }
            None => None,
        };
        let config = Self {
            q: common.q,
            d: common.d,
            f,
            window: window.unwrap_or(common.d + 2),
            variant,
            format: common.format,
            out: common.out.clone(),
            budget: common.budget,
            seed: common.seed,
            field,
        };
        if let Some(f) = &config.f {
            Place::new(config.field.clone(), f.clone())?;
        }
        Ok(config)
    }

    pub fn place(&self) -> Result<Place, CliError> {
        Ok(match &self.f {
            Some(f) => Place::new(self.field.clone(), f.clone())?,
            None => Place::first_of_degree(self.field.clone(), self.d as usize)?,
        })
    }
}
