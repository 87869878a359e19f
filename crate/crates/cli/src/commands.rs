use crate::output::OutputRecord;
use crate::regression::regression_tables;
use crate::{tables, Cli, CliError, Command, LawtonCommand};
use centralizer_dims::{stab_dim, StabKind};
use dimension_engine::{
    euclidean_char_dim, euclidean_invariant_dim, euclidean_twisted_euler, hitchin_dim, relative_dim,
    rep_variety_dim_euclidean, DimensionError,
};
use lawton_sl3::{
    eval_p, eval_q, lawton_residual, run_selftest, trace_coords, verify_paper_points, LawtonError, Mat3, Sl3Matrix,
    Tolerances,
};
use lie_catalog::{LieError, LieType};
use num_complex::Complex64;
use orbifold_model::{
    classify_geometry, euler_char, parse_signature, BoundaryList, EuclideanClass, Geometry, OrbifoldError,
    OrbifoldSignature,
};
use serde_json::{json, Value};
use three_orbifold::{canonical_dim, fig8_component_dims, whitehead_component_dims, ThreeOrbifoldError};

pub const DEFAULT_SEED: u64 = 42;
/// Samples of the random Lawton check inside `selftest`.
const SELFTEST_SAMPLES: usize = 2000;

impl From<OrbifoldError> for CliError {
    fn from(e: OrbifoldError) -> Self {
        match e {
            OrbifoldError::Parse(p) => Self::Parse(p.to_string()),
            other => Self::Domain(other.to_string()),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Parse { .. } => Self::Parse(e.to_string()),
            other => Self::Domain(other.to_string()),
        }
    }
}

impl From<DimensionError> for CliError {
    fn from(e: DimensionError) -> Self {
        match e {
            DimensionError::Orbifold(o) => o.into(),
            DimensionError::Lie(l) => l.into(),
            other => Self::Domain(other.to_string()),
        }
    }
}

impl From<ThreeOrbifoldError> for CliError {
    fn from(e: ThreeOrbifoldError) -> Self {
        match e {
            ThreeOrbifoldError::Dimension(d) => d.into(),
            other => Self::Domain(other.to_string()),
        }
    }
}

impl From<LawtonError> for CliError {
    fn from(e: LawtonError) -> Self {
        match e {
            LawtonError::Parse { .. } => Self::Parse(e.to_string()),
            other => Self::Domain(other.to_string()),
        }
    }
}

fn group(s: &str) -> Result<LieType, CliError> {
    Ok(s.parse::<LieType>()?)
}

fn signature(s: &str) -> Result<OrbifoldSignature, CliError> {
    Ok(parse_signature(s)?)
}

fn geometry_name(g: Geometry) -> &'static str {
    match g {
        Geometry::Spherical => "spherical",
        Geometry::Euclidean => "euclidean",
        Geometry::Hyperbolic => "hyperbolic",
        Geometry::Bad => "bad",
    }
}

fn complex_str(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im < 0.0 {
        format!("{re:.12}-{:.12}i", -im)
    } else {
        format!("{re:.12}+{im:.12}i")
    }
}

fn parse_matrix(entries: &[String], name: &str, tol: f64) -> Result<Sl3Matrix, CliError> {
    let parsed: Vec<Complex64> = entries
        .iter()
        .flat_map(|e| e.split_whitespace())
        .map(|t| t.parse::<Complex64>().map_err(|_| CliError::Parse(format!("invalid complex literal {t:?} in --{name}"))))
        .collect::<Result<_, _>>()?;
    if parsed.len() != 9 {
        return Err(CliError::Parse(format!("--{name} needs 9 entries, got {}", parsed.len())));
    }
    Ok(Sl3Matrix::new(Mat3::from_fn(|i, j| parsed[3 * i + j]), tol)?)
}

pub fn execute(cli: &Cli) -> Result<(OutputRecord, i32), CliError> {
    let ok = |r: OutputRecord| Ok((r, 0));
    match &cli.command {
        Command::Chi { signature: s } => {
            let o = signature(s)?;
            o.validate()?;
            ok(OutputRecord::new(json!({
                "orbifold": o.to_string(),
                "chi": euler_char(&o).to_string(),
                "chi_underlying": o.underlying_euler_char(),
            })))
        }
        Command::Classify { signature: s } => {
            let o = signature(s)?;
            let g = classify_geometry(&o)?;
            ok(OutputRecord::new(json!({
                "orbifold": o.to_string(),
                "chi": euler_char(&o).to_string(),
                "geometry": geometry_name(g),
            })))
        }
        Command::Stab { group: g, cyclic, dihedral, reflection } => {
            let g = group(g)?;
            let (kind, label) = match (cyclic, dihedral, reflection) {
                (Some(k), _, _) => (StabKind::Cyclic(*k), format!("C{k}")),
                (_, Some(k), _) => (StabKind::Dihedral(*k), format!("D{k}")),
                _ => (StabKind::Reflection, "reflection".to_string()),
            };
            let d = stab_dim(&g, kind).map_err(|e| CliError::Domain(e.to_string()))?;
            ok(OutputRecord::new(json!({"group": g.to_string(), "stabilizer": label, "dimension": d})))
        }
        Command::Hitchin { group: g, signature: s } => {
            let (g, o) = (group(g)?, signature(s)?);
            let r = hitchin_dim(&o, &g)?;
            let trace: Vec<Value> = r.formula_trace.iter().map(|(l, v)| json!([l, v])).collect();
            ok(OutputRecord::new(json!({
                "orbifold": o.to_string(),
                "group": g.to_string(),
                "dimension": r.value,
                "trace": trace,
            })))
        }
        Command::Euclidean { group: g, signature: s } => {
            let (g, o) = (group(g)?, signature(s)?);
            let e = EuclideanClass::from_signature(&o).ok_or_else(|| {
                CliError::Domain(format!("{o} is not a closed orientable Euclidean orbifold"))
            })?;
            ok(OutputRecord::new(json!({
                "orbifold": e.to_string(),
                "group": g.to_string(),
                "k": e.k(),
                "twisted_euler": euclidean_twisted_euler(e, &g),
                "char_dim": euclidean_char_dim(e, &g),
                "invariant_dim": euclidean_invariant_dim(e, &g),
                "rep_dim": rep_variety_dim_euclidean(e, &g),
            })))
        }
        Command::Relative { group: g, signature: s } => {
            let (g, o) = (group(g)?, signature(s)?);
            ok(OutputRecord::new(json!({
                "orbifold": o.to_string(),
                "group": g.to_string(),
                "dimension": relative_dim(&o, &g)?,
            })))
        }
        Command::Canonical { group: g, boundary } => {
            let g = group(g)?;
            let list = BoundaryList::parse(boundary)?;
            let r = canonical_dim(&list, &g)?;
            let per: Vec<Value> =
                r.per_boundary.iter().map(|(c, d)| json!({"component": c, "half_dim": d})).collect();
            let mut assumptions = r.assumptions.clone();
            if !cli.assume_hyperbolic {
                assumptions[0] = "hyperbolicity of the 3-orbifold was not asserted (--assume-hyperbolic); \
                                  the total is half the boundary dimension only"
                    .into();
            }
            ok(OutputRecord::new(json!({
                "group": g.to_string(),
                "total": r.total,
                "per_boundary": per,
                "hyperbolic_asserted": cli.assume_hyperbolic,
            }))
            .with_assumptions(assumptions))
        }
        Command::Fig8 { n } => {
            let (a, b, c) = fig8_component_dims(*n)?;
            ok(OutputRecord::new(json!({"n": n, "S2(3,3,4)": a, "S2(2,4,5)": b, "S2(2,3,7)": c})))
        }
        Command::Whitehead { n } => {
            let (a, b, c) = whitehead_component_dims(*n)?;
            ok(OutputRecord::new(json!({"n": n, "D2(3,3)": a, "D2(2,4)": b, "D2(2,3)": c})))
        }
        Command::Lawton { command } => lawton(cli, command),
        Command::Table { number } => {
            let t = tables::table(*number, cli.n_max).expect("range checked by the parser");
            let tsv = t.to_tsv();
            ok(OutputRecord::new(t.to_json()).with_tsv(tsv))
        }
        Command::Selftest => selftest(cli),
    }
}

fn tolerances(cli: &Cli) -> Tolerances {
    let mut t = Tolerances::default();
    if let Some(tol) = cli.tol {
        t.random_relative = tol;
    }
    t
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn lawton(cli: &Cli, command: &LawtonCommand) -> Result<(OutputRecord, i32), CliError> {
    match command {
        LawtonCommand::Selftest { samples } => {
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            let r = run_selftest(*samples, seed, tolerances(cli), workers());
            let code = if r.passed() { 0 } else { 1 };
            Ok((
                OutputRecord::new(json!({
                    "samples": r.samples,
                    "seed": r.seed,
                    "max_lawton_residual": r.max_lawton_residual,
                    "max_cayley_hamilton": r.max_cayley_hamilton,
                    "rejected_draws": r.rejected_draws,
                    "tolerance": r.tolerances.random_relative,
                    "passed": r.passed(),
                })),
                code,
            ))
        }
        LawtonCommand::Coords { a, b } => {
            let tol = cli.tol.unwrap_or(1e-9);
            let (a, b) = (parse_matrix(a, "a", tol)?, parse_matrix(b, "b", tol)?);
            let c = trace_coords(&a, &b);
            let (p, q) = (eval_p(&c), eval_q(&c));
            Ok((
                OutputRecord::new(json!({
                    "x": complex_str(c.x), "y": complex_str(c.y), "z": complex_str(c.z),
                    "u": complex_str(c.u), "v": complex_str(c.v), "w": complex_str(c.w),
                    "r": complex_str(c.r), "s": complex_str(c.s), "tau": complex_str(c.tau),
                    "P": complex_str(p), "Q": complex_str(q),
                    "residual": lawton_residual(&a, &b),
                })),
                0,
            ))
        }
        LawtonCommand::PaperPoints => {
            let r = verify_paper_points();
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({"id": c.id.to_string(), "name": c.name, "passed": c.passed, "exact": c.exact, "detail": c.detail}))
                .collect();
            let code = if r.all_passed() { 0 } else { 1 };
            Ok((OutputRecord::new(json!({"checks": checks, "all_passed": r.all_passed()})), code))
        }
    }
}

fn selftest(cli: &Cli) -> Result<(OutputRecord, i32), CliError> {
    let reg = regression_tables();
    let tables: Vec<Value> = reg
        .tables
        .iter()
        .map(|t| {
            let mism: Vec<Value> = t
                .mismatches
                .iter()
                .map(|m| json!({"row": m.row, "column": m.column, "printed": m.printed, "computed": m.computed, "known": m.known}))
                .collect();
            json!({"table": t.table, "cells": t.cells, "mismatches": mism})
        })
        .collect();
    let points = verify_paper_points();
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let random = run_selftest(SELFTEST_SAMPLES, seed, tolerances(cli), workers());
    let unexpected = reg.unexpected().len() + points.failures().len() + usize::from(!random.passed());
    let known = reg.mismatches().count() - reg.unexpected().len();
    Ok((
        OutputRecord::new(json!({
            "tables": tables,
            "known_printed_discrepancies": known,
            "paper_points_passed": points.all_passed(),
            "lawton_samples": random.samples,
            "lawton_max_residual": random.max_lawton_residual,
            "unexpected_failures": unexpected,
        })),
        if unexpected == 0 { 0 } else { 1 },
    ))
}
