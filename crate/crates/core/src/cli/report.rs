//! Text and JSON renderings of command results.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use crate::experiments::{Check, CounterexampleReport, SearchReport, ShapiroReport};
use crate::homotopy::{classify_real, SolutionSet, TrackerConfig};
use crate::polemap::{FiberMode, TargetPoly};
use crate::ratpoly::{format_rat, RatPolyMatrix};
use crate::sysmodel::{berstein_is_odd, schubert_degree, Field, GenericityVerdict};

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub m: usize,
    pub p: usize,
    /// Decimal string; the degree outgrows `u64` quickly.
    pub degree: String,
    pub parity: &'static str,
    pub parity_rule: &'static str,
}

pub fn degree_report(m: usize, p: usize) -> DegreeReport {
    let d = schubert_degree(m, p);
    let odd = d.bit(0);
    let rule_odd = berstein_is_odd(m, p);
    DegreeReport {
        m,
        p,
        degree: d.to_string(),
        parity: if odd { "odd" } else { "even" },
        parity_rule: match (rule_odd, rule_odd == odd) {
            (_, false) => "disagrees",
            (true, true) => "odd: min(m,p) = 1, or min(m,p) = 2 and max(m,p)+1 is a power of 2",
            (false, true) => "even: neither min(m,p) = 1 nor (min(m,p) = 2 with max(m,p)+1 a power of 2)",
        },
    }
}

pub fn render_degree(r: &DegreeReport) -> String {
    format!("d({},{}) = {} ({})\nparity rule: {}\n", r.m, r.p, r.degree, r.parity, r.parity_rule)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub m: usize,
    pub p: usize,
    pub n: usize,
    pub field: &'static str,
    pub verdict: String,
    pub authority: &'static str,
    pub degree: Option<String>,
}

pub fn classify_report(m: usize, p: usize, n: usize, field: Field, v: &GenericityVerdict) -> ClassifyReport {
    ClassifyReport {
        m,
        p,
        n,
        field: match field {
            Field::Real => "real",
            Field::AlgebraicallyClosed => "complex",
        },
        verdict: v.to_string(),
        authority: v.authority.tag(),
        degree: v.degree.as_ref().map(|d| d.to_string()),
    }
}

pub fn render_classify(r: &ClassifyReport) -> String {
    format!("(m,p,n) = ({},{},{}) over {}: {}\n", r.m, r.p, r.n, r.field, r.verdict)
}

#[derive(Clone, Debug, Serialize)]
pub struct SolutionEntry {
    pub index: usize,
    /// `m × p` gain, each entry `[re, im]`.
    pub gain: Vec<Vec<Complex64>>,
    pub residual: f64,
    pub is_real: bool,
    pub conjugate_partner: Option<usize>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TargetInfo {
    pub coeffs: Vec<String>,
    pub roots: Option<Vec<String>>,
}

impl TargetInfo {
    pub fn new(t: &TargetPoly) -> Self {
        TargetInfo {
            coeffs: t.poly().coeffs().iter().map(format_rat).collect(),
            roots: t.roots().map(|r| r.iter().map(format_rat).collect()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub name: Option<String>,
    pub m: usize,
    pub p: usize,
    pub n: usize,
    pub target: TargetInfo,
    pub mode: &'static str,
    pub seed: u64,
    /// `d(m,p)` when `n = mp`.
    pub degree: Option<String>,
    pub bezout_bound: usize,
    pub paths_tracked: usize,
    pub paths_diverged: usize,
    pub paths_failed: usize,
    pub num_solutions: usize,
    pub num_real: usize,
    pub num_complex: usize,
    pub conjugate_pairs: usize,
    pub unpaired: usize,
    pub max_residual: f64,
    pub warnings: Vec<String>,
    pub solutions: Vec<SolutionEntry>,
}

pub fn mode_name(mode: FiberMode) -> &'static str {
    match mode {
        FiberMode::RootEval => "root_eval",
        FiberMode::CoeffMatch => "coeff_match",
    }
}

pub struct SolveContext<'a> {
    pub name: Option<String>,
    pub m: usize,
    pub p: usize,
    pub n: usize,
    pub target: &'a TargetPoly,
    pub mode: FiberMode,
}

pub fn solve_report(ctx: &SolveContext<'_>, set: &SolutionSet, cfg: &TrackerConfig) -> SolveReport {
    let cls = classify_real(set, cfg);
    let degree = (ctx.n == ctx.m * ctx.p).then(|| schubert_degree(ctx.m, ctx.p).to_string());
    SolveReport {
        name: ctx.name.clone(),
        m: ctx.m,
        p: ctx.p,
        n: ctx.n,
        target: TargetInfo::new(ctx.target),
        mode: mode_name(ctx.mode),
        seed: cfg.seed,
        degree,
        bezout_bound: set.bezout_bound,
        paths_tracked: set.paths_tracked,
        paths_diverged: set.paths_diverged,
        paths_failed: set.paths_failed,
        num_solutions: set.solutions.len(),
        num_real: cls.num_real,
        num_complex: cls.num_complex,
        conjugate_pairs: cls.pairs,
        unpaired: cls.unpaired,
        max_residual: set.solutions.iter().map(|s| s.residual).fold(0.0, f64::max),
        warnings: set.warnings.clone(),
        solutions: set
            .solutions
            .iter()
            .enumerate()
            .map(|(index, s)| SolutionEntry {
                index,
                gain: s.as_matrix(ctx.m, ctx.p),
                residual: s.residual,
                is_real: s.is_real,
                conjugate_partner: s.conjugate_partner,
                multiplicity: s.multiplicity,
            })
            .collect(),
    }
}

/// `"14 solutions: 0 real, 14 complex (7 conjugate pairs)"` or
/// `"2 solutions: 2 real"`.
pub fn count_line(total: usize, real: usize, complex: usize, pairs: usize) -> String {
    let noun = if total == 1 { "solution" } else { "solutions" };
    if complex == 0 {
        format!("{total} {noun}: {real} real")
    } else {
        format!("{total} {noun}: {real} real, {complex} complex ({pairs} conjugate pairs)")
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.10e}", z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{:.10e} {sign} {:.10e}i", z.re, z.im.abs())
    }
}

pub fn render_solve(r: &SolveReport) -> String {
    let mut out = String::new();
    let name = r.name.as_deref().unwrap_or("system");
    let _ = writeln!(out, "{name}: m = {}, p = {}, n = {}", r.m, r.p, r.n);
    if let Some(d) = &r.degree {
        let _ = writeln!(out, "d({},{}) = {d}", r.m, r.p);
    }
    let _ = writeln!(out, "target coefficients (ascending): [{}]", r.target.coeffs.join(", "));
    let _ = writeln!(
        out,
        "mode {}, seed {}: {} paths tracked, {} diverged, {} failed",
        r.mode, r.seed, r.paths_tracked, r.paths_diverged, r.paths_failed
    );
    let _ = writeln!(out, "{}", count_line(r.num_solutions, r.num_real, r.num_complex, r.conjugate_pairs));
    let _ = writeln!(out, "max normalized residual {:.3e}", r.max_residual);
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    for s in &r.solutions {
        let kind = if s.is_real { "real" } else { "complex" };
        let _ = writeln!(out, "\n#{} ({kind}, residual {:.2e})", s.index, s.residual);
        for row in &s.gain {
            let cells: Vec<String> = row.iter().map(|z| fmt_complex(*z)).collect();
            let _ = writeln!(out, "  [ {} ]", cells.join(", "));
        }
    }
    out
}

fn render_checks(out: &mut String, checks: &[Check]) {
    for c in checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag}  {}: {}", c.name, c.detail);
    }
}

pub fn render_counterexample(r: &CounterexampleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "paths: {} tracked, {} diverged, {} failed",
        r.paths_tracked, r.paths_diverged, r.paths_failed
    );
    let complex = r.num_solutions - r.num_real;
    let _ = writeln!(out, "{}", count_line(r.num_solutions, r.num_real, complex, r.pairs));
    render_checks(&mut out, &r.checks);
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{verdict}: {}/{} printed solutions matched",
        r.matched_printed, r.printed_total
    );
    out
}

/// Rows as `[ s^5  s^4  s^3 | s^2  s  1 ]`, the bar after column `p`.
pub fn render_poly_rows(m: &RatPolyMatrix, split: usize) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|q| q.pretty("s")).collect())
        .collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let mut line = String::from("[ ");
        for (j, c) in row.iter().enumerate() {
            if j == split {
                line.push_str("| ");
            }
            let _ = write!(line, "{c:<w$} ", w = widths[j]);
        }
        line.push(']');
        let _ = writeln!(out, "{line}");
    }
    out
}

pub fn render_shapiro(r: &ShapiroReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "target roots: {}", r.target_roots.join(", "));
    let _ = writeln!(
        out,
        "paths: {} tracked, {} diverged, {} failed",
        r.paths_tracked, r.paths_diverged, r.paths_failed
    );
    let complex = r.num_solutions - r.num_real;
    let _ = writeln!(out, "{}", count_line(r.num_solutions, r.num_real, complex, complex / 2));
    render_checks(&mut out, &r.checks);
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "{verdict}: d({},{}) = {}", r.m, r.p, r.degree);
    out
}

pub fn render_search(r: &SearchReport) -> String {
    let mut out = String::new();
    let c = &r.config;
    let _ = writeln!(
        out,
        "(m,p) = ({},{}), d = {}, {} plants x {} targets, seed {}",
        c.m, c.p, r.degree, c.num_plants, c.targets_per_plant, c.seed
    );
    let _ = writeln!(
        out,
        "coefficients in [{}, {}], roots in [{}, {}]",
        c.coeff_range.0, c.coeff_range.1, c.root_range.0, c.root_range.1
    );
    let mut histogram = vec![0usize; r.degree + 1];
    for t in r.instances.iter().filter(|t| t.failure.is_none()) {
        histogram[t.num_real.min(r.degree)] += 1;
    }
    let _ = writeln!(out, "real solutions per fiber:");
    for (k, count) in histogram.iter().enumerate().filter(|(_, c)| **c > 0) {
        let _ = writeln!(out, "  {k:>3} real: {count}");
    }
    let _ = writeln!(
        out,
        "instances {}, all real {}, all complex {}, failures {}",
        r.instances_run, r.all_real_count, r.all_complex_count, r.failures
    );
    let solved = r.instances_run - r.failures;
    let _ = writeln!(
        out,
        "extreme fibers are {}: {} of {solved} solved fibers are all real or all complex",
        if 10 * (r.all_real_count + r.all_complex_count) <= solved { "rare" } else { "common" },
        r.all_real_count + r.all_complex_count
    );
    for t in r.instances.iter().filter(|t| t.failure.is_some()) {
        let _ = writeln!(
            out,
            "failed: plant {} target {}: {}",
            t.plant,
            t.target,
            t.failure.as_deref().unwrap_or_default()
        );
    }
    out
}
