//! Reproducible experiments: the real (4,2) plant whose fiber has no real
//! point, the Shapiro moment-curve plants, and a seeded random search.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cli::files::SystemFile;
use crate::error::{Error, Result};
use crate::homotopy::{classify_real, relative_distance, solve_system, Solution, TrackerConfig};
use crate::plucker::{plucker_of_mfd, PluckerSystem};
use crate::polemap::{chi_plucker, fiber_from_plucker, FiberMode, FiberSystem, TargetPoly};
use crate::ratpoly::{rat_int, Rat, RatMatrix, RatPoly, RatPolyMatrix};
use crate::sysmodel::{schubert_degree, PlantModel};

pub const COUNTEREXAMPLE_FILE: &str = include_str!("../data/counterexample.json");
pub const COUNTEREXAMPLE_ROOTS: [i64; 8] = [-8, -6, -4, -2, 1, 2, 3, 4];

/// Printed gains, upper sign of each `±` read, row-major `4×2`. The lower
/// sign is the entrywise conjugate.
const PRINTED: [[(&str, &str); 8]; 7] = [
    [
        ("-548.1543631072859", "539.02172783574002"),
        ("-2966.220011381735449", "1301.806890926492508"),
        ("227.99002317474104", "-195.29675914098226"),
        ("1189.40572416765385", "-428.190112835481936"),
        ("253.619670619102274", "-128.997418066861599"),
        ("1192.66093663708038", "-127.782426659628597"),
        ("-373.4608141108503", "-376.1870941851628"),
        ("-907.2715490825303837", "-2040.657619029875556"),
    ],
    [
        ("182.1974051162797", "1524.2891350121054"),
        ("-3910.9491667600289", "3319.9425134666556"),
        ("-92.76689536072804", "-494.390627883840"),
        ("1206.13014159582817", "-1171.58923461208352"),
        ("202.71121387564936", "-458.78014215695346"),
        ("1652.30669576900037", "-280.820983264097575"),
        ("-999.496765955436554", "-938.918292576740638"),
        ("771.9810394973421", "-4516.958140814761213"),
    ],
    [
        ("2792.9110057318105", "-969.00549705135278"),
        ("3350.9339523791667", "-832.762320679797284"),
        ("-338.608141548768", "-31.1420684422097"),
        ("-390.733153481711", "-71.9581835765450"),
        ("-858.10666480772375", "463.34803831698071"),
        ("-1047.08493981311276", "448.52274247532122"),
        ("-1736.0182637110866", "473.54602107116131"),
        ("-2069.7786151738302", "367.88390311074763"),
    ],
    [
        ("566.14047176252718", "-390.1690631954798"),
        ("894.7573009772359", "-213.7664118348474"),
        ("-28.9144418101747", "-8.82325220859399"),
        ("-31.9889032754154", "-25.1286025912621"),
        ("-101.611268377237", "166.198294126534"),
        ("-207.075559094765", "158.433905818864"),
        ("-433.109410705026", "160.543671922194"),
        ("-618.358581551134", "-8.42746099774335"),
    ],
    [
        ("-1328.31492831596508", "780.43146580510958"),
        ("2115.8811996413627", "-363.25099106004349"),
        ("277.0599315399026", "-134.0101686258348"),
        ("-426.505631447159", "38.4080785894925"),
        ("242.753288068855", "-128.748683783964"),
        ("-380.517275415650", "48.1897454846160"),
        ("809.814164981704", "-420.527784827832"),
        ("-1263.86094232894868", "149.27131835292291"),
    ],
    [
        ("-74.07812921055438", "-1186.0867962658997"),
        ("481.83814937211068", "-659.46539248077808"),
        ("131.85311577768057", "223.6599712395458"),
        ("-28.4575338243835", "176.018708417247"),
        ("50.0398731323218", "311.162560564792"),
        ("-110.484321267527", "186.531966999705"),
        ("120.94035205524575", "693.23751296762126"),
        ("-241.138619140528", "419.709352592197"),
    ],
    [
        ("-466.3420096818032", "2560.3776496553293"),
        ("-477.06216348936717", "1505.4573962873226"),
        ("206.16217936754085", "-504.1659905544772"),
        ("162.819554092696", "-287.715806475160"),
        ("198.483315335125", "-690.317301079547"),
        ("172.179197573658", "-400.2773514799496"),
        ("350.2539156691074", "-1658.3575908118343"),
        ("337.47012412920796", "-971.424525500586678"),
    ],
];

pub const MATCH_TOL: f64 = 1e-6;
pub const PRINTED_RESIDUAL_TOL: f64 = 1e-5;

/// One printed gain as decimal strings `(re, im)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedSolution {
    pub label: String,
    pub entries: Vec<(String, String)>,
}

impl PrintedSolution {
    pub fn point(&self) -> Result<Vec<Complex64>> {
        let num = |s: &str| {
            s.parse::<f64>().map_err(|e| Error::Parse {
                location: format!("printed solution {}", self.label),
                message: format!("{s:?}: {e}"),
            })
        };
        self.entries
            .iter()
            .map(|(re, im)| Ok(Complex64::new(num(re)?, num(im)?)))
            .collect()
    }
}

fn flip_sign(s: &str) -> String {
    match s.strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{s}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleData {
    pub system: SystemFile,
    pub phi_roots: Vec<i64>,
    pub printed_solutions: Vec<PrintedSolution>,
}

impl CounterexampleData {
    pub fn load() -> Result<Self> {
        let system = SystemFile::parse(COUNTEREXAMPLE_FILE)?;
        let mut printed_solutions = Vec::with_capacity(2 * PRINTED.len());
        for (i, template) in PRINTED.iter().enumerate() {
            let upper: Vec<(String, String)> = template.iter().map(|(r, c)| (r.to_string(), c.to_string())).collect();
            let lower = upper.iter().map(|(r, c)| (r.clone(), flip_sign(c))).collect();
            printed_solutions.push(PrintedSolution {
                label: format!("{}+", i + 1),
                entries: upper,
            });
            printed_solutions.push(PrintedSolution {
                label: format!("{}-", i + 1),
                entries: lower,
            });
        }
        Ok(CounterexampleData {
            system,
            phi_roots: COUNTEREXAMPLE_ROOTS.to_vec(),
            printed_solutions,
        })
    }

    pub fn plant(&self) -> Result<PlantModel> {
        self.system.to_plant()
    }

    pub fn plucker(&self) -> Result<PluckerSystem> {
        let plant = self.plant()?;
        let mfd = plant.mfd.as_ref().ok_or_else(|| Error::Internal("counterexample lacks D, N".into()))?;
        plucker_of_mfd(&mfd.d, &mfd.n)
    }

    pub fn target(&self) -> Result<TargetPoly> {
        TargetPoly::from_int_roots(&self.phi_roots)
    }

    pub fn fiber(&self, mode: FiberMode) -> Result<FiberSystem> {
        fiber_from_plucker(&self.plucker()?, &self.target()?, mode)
    }
}

/// A named pass/fail line of a harness report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub checks: Vec<Check>,
    pub paths_tracked: usize,
    pub paths_diverged: usize,
    pub paths_failed: usize,
    pub num_solutions: usize,
    pub num_real: usize,
    pub pairs: usize,
    pub matched_printed: usize,
    pub printed_total: usize,
    pub max_match_distance: f64,
    pub max_printed_residual: f64,
    pub solutions: Vec<Solution>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Solve the embedded counterexample and compare against the printed gains.
pub fn verify_counterexample(cfg: &TrackerConfig) -> Result<CounterexampleReport> {
    let data = CounterexampleData::load()?;
    let fiber = data.fiber(FiberMode::CoeffMatch)?;
    let degree = schubert_degree(4, 2).to_usize().expect("small");
    let set = solve_system(&fiber.system, cfg)?;
    let cls = classify_real(&set, cfg);

    let printed: Vec<Vec<Complex64>> = data
        .printed_solutions
        .iter()
        .map(PrintedSolution::point)
        .collect::<Result<_>>()?;
    let mut matched = 0;
    let mut max_match_distance: f64 = 0.0;
    for p in &printed {
        let best = set
            .solutions
            .iter()
            .map(|s| relative_distance(&s.point, p))
            .fold(f64::INFINITY, f64::min);
        if best < MATCH_TOL {
            matched += 1;
        }
        max_match_distance = max_match_distance.max(best);
    }
    let max_printed_residual = printed
        .iter()
        .map(|p| fiber.normalized_residual(p))
        .fold(0.0, f64::max);

    let n = set.solutions.len();
    let checks = vec![
        Check::new(
            "solution count",
            n == degree,
            format!("{n} solutions, expected d(4,2) = {degree}"),
        ),
        Check::new("no real solution", n > 0 && cls.num_real == 0, format!("{} real", cls.num_real)),
        Check::new(
            "conjugate pairs",
            cls.pairs == degree / 2 && cls.unpaired == 0,
            format!("{} pairs, {} unpaired", cls.pairs, cls.unpaired),
        ),
        Check::new(
            "printed solutions reproduced",
            matched == printed.len(),
            format!(
                "{matched}/{} within {MATCH_TOL:e} relative (worst {max_match_distance:.2e})",
                printed.len()
            ),
        ),
        Check::new(
            "printed solutions satisfy the fiber equations",
            max_printed_residual < PRINTED_RESIDUAL_TOL,
            format!("max normalized residual {max_printed_residual:.2e} < {PRINTED_RESIDUAL_TOL:e}"),
        ),
    ];
    Ok(CounterexampleReport {
        checks,
        paths_tracked: set.paths_tracked,
        paths_diverged: set.paths_diverged,
        paths_failed: set.paths_failed,
        num_solutions: n,
        num_real: cls.num_real,
        pairs: cls.pairs,
        matched_printed: matched,
        printed_total: printed.len(),
        max_match_distance,
        max_printed_residual,
        solutions: set.solutions,
    })
}

/// The `p × (m+p)` moment-curve matrix: row 0 is `first_row` (by default
/// `s^{m+p-1}, …, s, 1`), row `j` is the derivative of row `j-1` divided by `j`.
pub fn shapiro_matrix(m: usize, p: usize, first_row: Option<&[RatPoly]>) -> Result<RatPolyMatrix> {
    if m == 0 || p == 0 {
        return Err(Error::InvalidArgument(format!("need m, p >= 1, got ({m}, {p})")));
    }
    let width = m + p;
    let row0: Vec<RatPoly> = match first_row {
        None => (0..width)
            .map(|j| RatPoly::monomial(rat_int(1), width - 1 - j))
            .collect(),
        Some(r) => {
            if r.len() != width {
                return Err(Error::InvalidArgument(format!(
                    "first row needs {width} entries, got {}",
                    r.len()
                )));
            }
            if r.iter().any(|q| q.degree() >= width as isize) {
                return Err(Error::InvalidArgument(format!(
                    "first row entries must have degree <= {}",
                    width - 1
                )));
            }
            let mut coeffs = RatMatrix::zeros(width, width);
            for (i, q) in r.iter().enumerate() {
                for k in 0..width {
                    coeffs.set(i, k, q.coeff(k));
                }
            }
            if coeffs.rank() != width {
                return Err(Error::InvalidArgument(format!(
                    "first row does not span polynomials of degree <= {}",
                    width - 1
                )));
            }
            r.to_vec()
        }
    };
    let mut rows = vec![row0];
    for j in 1..p {
        let inv = Rat::new(1.into(), (j as i64).into());
        let next = rows[j - 1].iter().map(|q| q.diff().scale(&inv)).collect();
        rows.push(next);
    }
    RatPolyMatrix::from_rows(rows)
}

/// Split the moment-curve matrix into `D` (first `p` columns) and `N`.
pub fn shapiro_system(m: usize, p: usize, first_row: Option<&[RatPoly]>) -> Result<(RatPolyMatrix, RatPolyMatrix)> {
    let full = shapiro_matrix(m, p, first_row)?;
    let d = full.select_columns(&(0..p).collect::<Vec<_>>());
    let n = full.select_columns(&(p..m + p).collect::<Vec<_>>());
    Ok((d, n))
}

/// `1, -1, 2, -2, …`, the first `n` of them.
pub fn shapiro_default_roots(n: usize) -> Vec<i64> {
    (0..n)
        .map(|i| {
            let k = (i / 2 + 1) as i64;
            if i % 2 == 0 {
                k
            } else {
                -k
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShapiroReport {
    pub m: usize,
    pub p: usize,
    pub degree: usize,
    pub target_roots: Vec<String>,
    pub checks: Vec<Check>,
    pub paths_tracked: usize,
    pub paths_diverged: usize,
    pub paths_failed: usize,
    pub num_solutions: usize,
    pub num_real: usize,
    pub solutions: Vec<Solution>,
}

impl ShapiroReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Solve the Shapiro fiber over a target with distinct real roots and check
/// that all `d(m,p)` solutions are real.
pub fn shapiro_verify(m: usize, p: usize, target: &TargetPoly, cfg: &TrackerConfig) -> Result<ShapiroReport> {
    let n = m * p;
    if target.degree() != n {
        return Err(Error::InvalidTarget(format!(
            "target has degree {}, expected {n}",
            target.degree()
        )));
    }
    if !target.has_distinct_roots() {
        return Err(Error::InvalidTarget("roots must be real and distinct".into()));
    }
    let degree = schubert_degree(m, p)
        .to_usize()
        .ok_or_else(|| Error::Unsupported(format!("d({m},{p}) is too large to solve")))?;
    let (d, nm) = shapiro_system(m, p, None)?;
    let sys = plucker_of_mfd(&d, &nm)?;
    let chi0 = chi_plucker(&sys, &RatMatrix::zeros(m, p))?;
    let chi0_ok = chi0 == RatPoly::monomial(rat_int(1), n);

    let fiber = fiber_from_plucker(&sys, target, FiberMode::CoeffMatch)?;
    let set = solve_system(&fiber.system, cfg)?;
    let cls = classify_real(&set, cfg);
    let count = set.solutions.len();
    let checks = vec![
        Check::new("chi(0) = s^mp", chi0_ok, format!("chi(0) = {chi0}")),
        Check::new(
            "solution count",
            count == degree,
            format!("{count} solutions, expected d({m},{p}) = {degree}"),
        ),
        Check::new(
            "all solutions real",
            count > 0 && cls.num_real == count,
            format!("{} of {count} real", cls.num_real),
        ),
    ];
    Ok(ShapiroReport {
        m,
        p,
        degree,
        target_roots: target
            .roots()
            .expect("distinct roots checked")
            .iter()
            .map(crate::ratpoly::format_rat)
            .collect(),
        checks,
        paths_tracked: set.paths_tracked,
        paths_diverged: set.paths_diverged,
        paths_failed: set.paths_failed,
        num_solutions: count,
        num_real: cls.num_real,
        solutions: set.solutions,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub num_plants: usize,
    pub targets_per_plant: usize,
    pub coeff_range: (i64, i64),
    pub root_range: (i64, i64),
    pub m: usize,
    pub p: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            num_plants: 70,
            targets_per_plant: 25,
            coeff_range: (-40, 40),
            root_range: (-12, 12),
            m: 4,
            p: 2,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.m == 0 || self.p == 0 {
            return bad(format!("need m, p >= 1, got ({}, {})", self.m, self.p));
        }
        if self.num_plants == 0 || self.targets_per_plant == 0 {
            return bad("plant and target counts must be positive".into());
        }
        if self.coeff_range.0 > self.coeff_range.1 {
            return bad(format!("empty coefficient range {:?}", self.coeff_range));
        }
        let (lo, hi) = self.root_range;
        let n = self.m * self.p;
        if hi < lo || ((hi - lo + 1) as usize) < n {
            return bad(format!("root range [{lo}, {hi}] holds fewer than {n} distinct integers"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceTally {
    pub plant: usize,
    pub target: usize,
    pub roots: Vec<i64>,
    pub num_solutions: usize,
    pub num_real: usize,
    pub num_complex: usize,
    pub paths_failed: usize,
    /// Empty on success, otherwise the reason the instance was not counted.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub degree: usize,
    pub instances_run: usize,
    pub all_real_count: usize,
    pub all_complex_count: usize,
    pub failures: usize,
    pub instances: Vec<InstanceTally>,
    #[serde(skip)]
    pub runtime: Duration,
}

/// Random plant with monic diagonal `s^m` in `D`, every other coefficient of
/// `D` below degree `m` and of `N` below degree `m` drawn from `range`.
pub fn random_plant(m: usize, p: usize, range: (i64, i64), rng: &mut ChaCha8Rng) -> Result<(RatPolyMatrix, RatPolyMatrix)> {
    let mut draw = |len: usize| -> RatPoly {
        RatPoly::new((0..len).map(|_| rat_int(rng.random_range(range.0..=range.1))).collect())
    };
    let mut d_rows = Vec::with_capacity(p);
    for i in 0..p {
        let row = (0..p)
            .map(|j| {
                let low = draw(m);
                if i == j {
                    low + RatPoly::monomial(rat_int(1), m)
                } else {
                    low
                }
            })
            .collect();
        d_rows.push(row);
    }
    let n_rows = (0..p).map(|_| (0..m).map(|_| draw(m)).collect()).collect();
    Ok((RatPolyMatrix::from_rows(d_rows)?, RatPolyMatrix::from_rows(n_rows)?))
}

struct Instance {
    plant: usize,
    target: usize,
    sys: std::sync::Arc<PluckerSystem>,
    roots: Vec<i64>,
}

const MAX_REJECTIONS: usize = 1000;

/// Generate and solve `num_plants × targets_per_plant` fibers and count the
/// all-real and all-complex ones.
pub fn random_search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let started = Instant::now();
    let (m, p) = (config.m, config.p);
    let n = m * p;
    let degree = schubert_degree(m, p)
        .to_usize()
        .ok_or_else(|| Error::Unsupported(format!("d({m},{p}) is too large to solve")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pool: Vec<i64> = (config.root_range.0..=config.root_range.1).collect();

    let mut instances = Vec::new();
    for plant in 0..config.num_plants {
        let mut tries = 0;
        let sys = loop {
            let (d, nm) = random_plant(m, p, config.coeff_range, &mut rng)?;
            if let Ok(sys) = plucker_of_mfd(&d, &nm) {
                if sys.n == n {
                    break std::sync::Arc::new(sys);
                }
            }
            tries += 1;
            if tries >= MAX_REJECTIONS {
                return Err(Error::InvalidArgument(
                    "coefficient range never produced a valid plant".into(),
                ));
            }
        };
        for target in 0..config.targets_per_plant {
            let mut roots: Vec<i64> = pool.choose_multiple(&mut rng, n).copied().collect();
            roots.sort_unstable();
            instances.push(Instance {
                plant,
                target,
                sys: sys.clone(),
                roots,
            });
        }
    }

    let tallies: Vec<InstanceTally> = instances
        .par_iter()
        .enumerate()
        .map(|(idx, inst)| solve_instance(inst, degree, config.seed.wrapping_add(idx as u64)))
        .collect();

    let ok = |t: &&InstanceTally| t.failure.is_none();
    Ok(SearchReport {
        config: config.clone(),
        degree,
        instances_run: tallies.len(),
        all_real_count: tallies.iter().filter(ok).filter(|t| t.num_real == degree).count(),
        all_complex_count: tallies.iter().filter(ok).filter(|t| t.num_complex == degree).count(),
        failures: tallies.iter().filter(|t| t.failure.is_some()).count(),
        instances: tallies,
        runtime: started.elapsed(),
    })
}

fn solve_instance(inst: &Instance, degree: usize, seed: u64) -> InstanceTally {
    let mut tally = InstanceTally {
        plant: inst.plant,
        target: inst.target,
        roots: inst.roots.clone(),
        num_solutions: 0,
        num_real: 0,
        num_complex: 0,
        paths_failed: 0,
        failure: None,
    };
    let cfg = TrackerConfig::with_seed(seed);
    let solved = TargetPoly::from_int_roots(&inst.roots)
        .and_then(|t| fiber_from_plucker(&inst.sys, &t, FiberMode::CoeffMatch))
        .and_then(|f| solve_system(&f.system, &cfg));
    match solved {
        Err(e) => tally.failure = Some(e.to_string()),
        Ok(set) => {
            let cls = classify_real(&set, &cfg);
            tally.num_solutions = set.solutions.len();
            tally.num_real = cls.num_real;
            tally.num_complex = cls.num_complex;
            tally.paths_failed = set.paths_failed;
            if tally.num_solutions != degree {
                tally.failure = Some(format!(
                    "{} solutions instead of {degree} ({} paths failed)",
                    tally.num_solutions, set.paths_failed
                ));
            }
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapiro_three_by_three_matches_display() {
        let full = shapiro_matrix(3, 3, None).unwrap();
        let p = RatPoly::from_ints;
        let expect = RatPolyMatrix::from_rows(vec![
            vec![p(&[0, 0, 0, 0, 0, 1]), p(&[0, 0, 0, 0, 1]), p(&[0, 0, 0, 1]), p(&[0, 0, 1]), p(&[0, 1]), p(&[1])],
            vec![p(&[0, 0, 0, 0, 5]), p(&[0, 0, 0, 4]), p(&[0, 0, 3]), p(&[0, 2]), p(&[1]), p(&[])],
            vec![p(&[0, 0, 0, 10]), p(&[0, 0, 6]), p(&[0, 3]), p(&[1]), p(&[]), p(&[])],
        ])
        .unwrap();
        assert_eq!(full, expect);
    }

    #[test]
    fn shapiro_single_row() {
        let (d, n) = shapiro_system(3, 1, None).unwrap();
        assert_eq!(d.get(0, 0), &RatPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(n.row(0).len(), 3);
    }

    #[test]
    fn shapiro_rejects_dependent_first_row() {
        let row: Vec<RatPoly> = [[1, 0], [0, 1], [1, 1], [2, 0]]
            .iter()
            .map(|c| RatPoly::from_ints(c))
            .collect();
        assert!(shapiro_system(2, 2, Some(&row)).is_err());
    }

    #[test]
    fn default_roots_are_symmetric() {
        assert_eq!(shapiro_default_roots(4), vec![1, -1, 2, -2]);
        assert_eq!(shapiro_default_roots(3), vec![1, -1, 2]);
    }

    #[test]
    fn counterexample_loads() {
        let data = CounterexampleData::load().unwrap();
        assert_eq!(data.printed_solutions.len(), 14);
        let sys = data.plucker().unwrap();
        assert_eq!(sys.n, 8);
        assert_eq!(sys.g[0], RatPoly::from_ints(&[80, 36, -38, 41, 37, -144, 110, -13, 1]));
    }

    #[test]
    fn search_config_validation() {
        let mut c = SearchConfig {
            root_range: (0, 3),
            ..SearchConfig::default()
        };
        assert!(c.validate().is_err());
        c.root_range = (-12, 12);
        c.coeff_range = (5, 4);
        assert!(c.validate().is_err());
    }
}
