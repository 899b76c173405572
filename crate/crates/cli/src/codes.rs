//! Instantiates a code from command-line flags or from a file header.

use clap::Args;

use rmcodes::kendall::{BchLatticeCode, GolombWelchCode, GrayEmbedSpec, GreedyCode, RhoCodeSpec};
use rmcodes::linf::{ConcatCodeSpec, SpreadCodeSpec};
use rmcodes::{Codebook, ConstructionId, Permutation, SystematicCode};

use crate::file::Header;
use crate::Failure;

#[derive(Args, Debug, Clone, Default)]
pub struct CodeArgs {
    /// Code family: c1, c2, rho, c3, c4, c5, c6 or c7.
    #[arg(long, value_parser = parse_construction)]
    pub construction: Option<ConstructionId>,
    /// Length (c5, c6), inner length (c7) or BCH length (c3).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of information symbols.
    #[arg(long)]
    pub k: Option<usize>,
    /// Minimum distance (c5, c6, c7).
    #[arg(long)]
    pub d: Option<u64>,
    /// Redundancy digits of the weighted-sum code (rho).
    #[arg(long)]
    pub r: Option<usize>,
    /// Modulus (c1, rho) or extension degree (c3).
    #[arg(long)]
    pub m: Option<usize>,
    /// Field characteristic (c3).
    #[arg(long)]
    pub p: Option<u32>,
    /// Lee-error correction capability (c3).
    #[arg(long)]
    pub t: Option<usize>,
    /// Binary code to embed, e.g. hamming:4 (c4).
    #[arg(long)]
    pub binary: Option<String>,
}

fn parse_construction(s: &str) -> Result<ConstructionId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn need<T: Copy>(value: Option<T>, flag: &str, c: ConstructionId) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("{c} needs --{flag}")))
}

fn rho_spec(k: usize, r: usize, m: Option<usize>) -> rmcodes::Result<RhoCodeSpec> {
    match m {
        Some(m) => RhoCodeSpec::with_modulus(k, r, m),
        None => RhoCodeSpec::new(k, r),
    }
}

pub fn from_args(a: &CodeArgs) -> Result<Box<dyn SystematicCode>, Failure> {
    let c = a
        .construction
        .ok_or_else(|| Failure::usage("either --construction or --file is required"))?;
    let code: Box<dyn SystematicCode> = match c {
        ConstructionId::C1 => Box::new(rho_spec(need(a.k, "k", c)?, 2, a.m)?),
        ConstructionId::Rho => Box::new(rho_spec(need(a.k, "k", c)?, need(a.r, "r", c)?, a.m)?),
        ConstructionId::C2 => Box::new(GolombWelchCode::new(need(a.k, "k", c)?)?),
        ConstructionId::C3 => Box::new(BchLatticeCode::new(
            need(a.p, "p", c)?,
            need(a.m, "m", c)?,
            need(a.t, "t", c)?,
            need(a.n, "n", c)?,
        )?),
        ConstructionId::C4 => {
            let name = a.binary.as_deref().ok_or_else(|| Failure::usage("c4 needs --binary"))?;
            Box::new(GrayEmbedSpec::from_binary_name(name)?)
        }
        ConstructionId::C5 => Box::new(GreedyCode::new(
            need(a.n, "n", c)?,
            need(a.k, "k", c)?,
            need(a.d, "d", c)?,
        )?),
        ConstructionId::C6 => {
            let (n, d) = (need(a.n, "n", c)?, need(a.d, "d", c)? as usize);
            match a.k {
                Some(k) => Box::new(SpreadCodeSpec::new(n, d, k)?),
                None => Box::new(SpreadCodeSpec::with_max_k(n, d)?),
            }
        }
        ConstructionId::C7 => Box::new(ConcatCodeSpec::new(need(a.n, "n", c)?, need(a.d, "d", c)? as usize)?),
    };
    Ok(code)
}

/// Rebuilds the code a header describes. A c5 codebook body, when present,
/// is used as the code itself.
pub fn from_header(h: &Header, body: Option<&[Permutation]>) -> Result<Box<dyn SystematicCode>, Failure> {
    let bad = |e: String| Failure::usage(e);
    let code: Box<dyn SystematicCode> = match h.construction {
        ConstructionId::C1 | ConstructionId::Rho => Box::new(RhoCodeSpec::with_modulus(
            h.k,
            h.param_num("r").map_err(bad)?,
            h.param_num("m").map_err(bad)?,
        )?),
        ConstructionId::C2 => Box::new(GolombWelchCode::new(h.k)?),
        ConstructionId::C3 => Box::new(BchLatticeCode::new(
            h.param_num("p").map_err(bad)?,
            h.param_num("m").map_err(bad)?,
            h.param_num("t").map_err(bad)?,
            h.param_num("bch_n").map_err(bad)?,
        )?),
        ConstructionId::C4 => {
            let name = h.param("binary").ok_or_else(|| bad("header is missing binary=".into()))?;
            Box::new(GrayEmbedSpec::from_binary_name(name)?)
        }
        ConstructionId::C5 => match body {
            Some(words) => Box::new(GreedyCode::from_codebook(Codebook::new(
                h.n,
                h.k,
                h.d,
                h.metric,
                h.construction,
                words.to_vec(),
            )?)),
            None => Box::new(GreedyCode::new(h.n, h.k, h.d)?),
        },
        ConstructionId::C6 => Box::new(SpreadCodeSpec::new(h.n, h.d as usize, h.k)?),
        ConstructionId::C7 => Box::new(ConcatCodeSpec::new(h.param_num("inner_n").map_err(bad)?, h.d as usize)?),
    };
    let params: Vec<(String, String)> = code.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    let consistent = code.metric() == h.metric
        && code.length() == h.n
        && code.info_len() == h.k
        && params.iter().all(|(k, v)| h.param(k) == Some(v.as_str()));
    if !consistent {
        return Err(Failure::usage(format!(
            "header does not describe a valid {} code",
            h.construction
        )));
    }
    Ok(code)
}
