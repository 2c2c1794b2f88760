use btquot::algebra::enumerate_monic_irreducibles;
use btquot::projective::{h_group, moebius_orbit_census, ProjMat};
use btquot::quotient::{build_quotient, closed_form_multiplicity, QuotientGraph};
use btquot::upsilon::{
    double_coset_partition, enumerate_upsilon_with, left_coset_partition, SearchOptions,
};
use btquot::verify::{verify_instance, VerificationReport, VerifyOptions};
use btquot::Exec;
use serde::{Deserialize, Serialize};

use crate::config::{Format, RunConfig};
use crate::render;
use crate::CliError;

/// Rendered output and whether the command's checks passed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

fn no_dot(cfg: &RunConfig, what: &str) -> Result<(), CliError> {
    if cfg.format == Format::Dot {
        return Err(CliError::Usage(format!("{what} has no dot rendering")));
    }
    Ok(())
}

pub fn quotient_graph(cfg: &RunConfig) -> Result<QuotientGraph, CliError> {
    Ok(build_quotient(cfg.q, cfg.d, cfg.window, cfg.variant)?)
}

pub fn cmd_quotient(cfg: &RunConfig) -> Result<Output, CliError> {
    let g = quotient_graph(cfg)?;
    Ok(Output::ok(match cfg.format {
        Format::Json => render::json(&g),
        Format::Dot => render::dot(&g),
        Format::Ascii => render::ascii(&g),
    }))
}

pub fn verification(cfg: &RunConfig, f_independence: bool) -> Result<VerificationReport, CliError> {
    let opts = VerifyOptions {
        budget: cfg.budget,
        seed: cfg.seed,
        check_f_independence: f_independence,
        ..VerifyOptions::default()
    };
    Ok(verify_instance(&cfg.place()?, cfg.window, &opts)?)
}

pub fn cmd_verify(cfg: &RunConfig, f_independence: bool) -> Result<Output, CliError> {
    no_dot(cfg, "verify")?;
    let report = verification(cfg, f_independence)?;
    let text = match cfg.format {
        Format::Ascii => render::report_ascii(&report),
        _ => render::json(&report),
    };
    if let Some(b) = &report.budget_failure {
        return Err(CliError::Budget {
            detail: format!(
                "Upsilon({}, {}) needs {} candidate tuples, budget {}",
                b.n, b.m, b.required, b.budget
            ),
            partial: Some(text),
        });
    }
    Ok(Output {
        text,
        pass: report.pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRecord {
    pub q: u64,
    pub d: u32,
    pub f: String,
    pub n: u32,
    pub m: u32,
    pub upsilon_size: usize,
    pub left_cosets: usize,
    pub double_cosets: usize,
    pub closed_form: u64,
    pub pass: bool,
}

pub fn cmd_cosets(cfg: &RunConfig, n: u32, m: u32) -> Result<Output, CliError> {
    no_dot(cfg, "cosets")?;
    let place = cfg.place()?;
    let k = place.field();
    let opts = SearchOptions {
        budget: cfg.budget,
        exec: Exec::default(),
    };
    let u = enumerate_upsilon_with(&place, n, m, opts)?;
    let (h_n, h_m) = (h_group(k, n), h_group(k, m));
    let left = left_coset_partition(&u, &h_m, opts.exec)?.class_count();
    let double = double_coset_partition(&u, &h_n, &h_m, opts.exec)?.class_count();
    let closed_form = closed_form_multiplicity(cfg.q, cfg.d, n, m)?;
    let record = CosetRecord {
        q: cfg.q,
        d: cfg.d,
        f: place.f().to_string_in(k),
        n,
        m,
        upsilon_size: u.len(),
        left_cosets: left,
        double_cosets: double,
        closed_form,
        pass: double as u64 == closed_form,
    };
    let text = match cfg.format {
        Format::Ascii => format!(
            "Upsilon({n}, {m}) at f = {}\n  elements       {}\n  left cosets    {}\n  double cosets  {}\n  closed form    {}\n",
            record.f, record.upsilon_size, record.left_cosets, record.double_cosets, record.closed_form
        ),
        _ => render::json(&record),
    };
    Ok(Output {
        text,
        pass: record.pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub q: u64,
    pub d: u32,
    pub points: u64,
    pub lengths: Vec<u64>,
}

pub fn cmd_orbits(cfg: &RunConfig) -> Result<Output, CliError> {
    no_dot(cfg, "orbits")?;
    let census = moebius_orbit_census(&cfg.field, cfg.d)?;
    let record = OrbitRecord {
        q: cfg.q,
        d: cfg.d,
        points: census.point_count(),
        lengths: census.lengths.clone(),
    };
    let text = match cfg.format {
        Format::Ascii => {
            let mut s = format!(
                "{} points in {} orbits\n",
                record.points,
                record.lengths.len()
            );
            for (len, count) in census.histogram() {
                s.push_str(&format!("  length {len}: {count}\n"));
            }
            s
        }
        _ => render::json(&record),
    };
    Ok(Output::ok(text))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    pub matrix: String,
    pub canonical: String,
    pub distance: u32,
}

pub fn cmd_distance(cfg: &RunConfig, matrix: &str) -> Result<Output, CliError> {
    no_dot(cfg, "distance")?;
    let place = cfg.place()?;
    let k = place.field();
    let mat = ProjMat::parse(matrix, k)?;
    let record = DistanceRecord {
        matrix: matrix.to_string(),
        canonical: mat.to_string_in(k),
        distance: mat.bt_distance(&place),
    };
    let text = match cfg.format {
        Format::Ascii => format!("{}\n", record.distance),
        _ => render::json(&record),
    };
    Ok(Output::ok(text))
}

pub fn cmd_irreducibles(cfg: &RunConfig) -> Result<Output, CliError> {
    no_dot(cfg, "irreducibles")?;
    let list: Vec<String> = enumerate_monic_irreducibles(&cfg.field, cfg.d as usize)
        .iter()
        .map(|f| f.to_string_in(&cfg.field))
        .collect();
    let text = match cfg.format {
        Format::Ascii => list.iter().map(|f| format!("{f}\n")).collect(),
        _ => render::json(&list),
    };
    Ok(Output::ok(text))
}
