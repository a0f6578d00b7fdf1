use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{Experiment, ExperimentConfig, FracOperator, InitialData, SpecialFunction};
use crate::analysis::{
    fit_gronwall_coefficient, gns_ratio, gronwall_check, lemma2_ratios, maximal_regularity_ratio,
    power_inequality_check, random_forcing, uniqueness_metric, write_reports_csv, EstimateReport,
    GronwallInput,
};
use crate::error::{Error, Result};
use crate::fracops::{caputo_derivative, rl_integral, SampledSignal, TimeGrid};
use crate::solver::{
    classical_reference, picard_pair, solve_mild, solve_mild_with_diagnostics,
    write_diagnostics_csv, PicardInit, SolverConfig,
};
use crate::specfun::{gamma_fn, mainardi, mainardi_moment, mittag_leffler, EvalPolicy, MLParams};
use crate::spectral::{
    random_bandlimited, read_field, taylor_green_perturbed, write_field, NormSpec, SpectralField,
    TorusGrid, Trajectory,
};

/// What a run left on disk.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub output_dir: PathBuf,
    pub files: Vec<PathBuf>,
}

/// One row of the classical-limit table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitRow {
    pub alpha: f64,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitCheck {
    pub rows: Vec<LimitRow>,
    /// Gaps strictly decrease along the α sequence.
    pub monotone: bool,
}

fn config_err(key: &str, message: impl Into<String>) -> Error {
    Error::Config { key: key.into(), message: message.into() }
}

fn fmt(x: f64) -> String {
    format!("{x:.17e}")
}

pub fn ml_policy(cfg: &ExperimentConfig) -> EvalPolicy {
    EvalPolicy {
        series_cutoff_radius: cfg.tolerances.ml_cutoff,
        target_abs_tol: cfg.tolerances.ml_abs_tol,
        ..EvalPolicy::default()
    }
}

pub fn solver_config(cfg: &ExperimentConfig, alpha: f64) -> Result<SolverConfig> {
    let mut s = SolverConfig::new(alpha, TimeGrid::new(cfg.t_end, cfg.steps)?)?
        .with_picard(cfg.tolerances.picard_tol, cfg.tolerances.picard_max_iters);
    s.ml_policy = ml_policy(cfg);
    s.validate()?;
    Ok(s)
}

pub fn grid(cfg: &ExperimentConfig) -> Result<TorusGrid> {
    TorusGrid::new(cfg.dim, cfg.resolution)
}

/// Builds the configured initial velocity: divergence-free and dealiased.
pub fn initial_data(cfg: &ExperimentConfig, grid: &TorusGrid) -> Result<SpectralField> {
    match &cfg.initial_data {
        InitialData::TaylorGreen { amplitude, perturbation } => taylor_green_perturbed(grid, *amplitude, *perturbation)
            .map_err(|e| config_err("initial_data", e.to_string())),
        InitialData::RandomBandlimited { seed, band, l2_norm } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            random_bandlimited(grid, *band, *l2_norm, true, &mut rng)
        }
        InitialData::File { path } => {
            let f = File::open(path).map_err(|e| config_err("initial_data.path", format!("{}: {e}", path.display())))?;
            let (u, _) = read_field(BufReader::new(f))?;
            if u.grid() != grid {
                return Err(config_err(
                    "initial_data.path",
                    format!("snapshot grid {:?} does not match dim/resolution", u.grid()),
                ));
            }
            if !u.is_div_free() {
                return Err(config_err("initial_data.path", "snapshot is not divergence-free"));
            }
            Ok(u.dealiased())
        }
    }
}

/// ‖u_α(T) − u_1(T)‖_{L²} for each configured α, with u_1 from the classical solver.
pub fn limit_check(cfg: &ExperimentConfig) -> Result<LimitCheck> {
    let g = grid(cfg)?;
    let u0 = initial_data(cfg, &g)?;
    let reference = classical_reference(&u0, &solver_config(cfg, 1.0)?)?;
    let mut rows = Vec::new();
    for &alpha in &cfg.limit_check.alphas {
        let traj = solve_mild(&u0, &solver_config(cfg, alpha)?)?;
        rows.push(LimitRow { alpha, gap: traj.last().sub(reference.last())?.l2_norm() });
    }
    let monotone = rows.windows(2).all(|w| w[1].gap < w[0].gap);
    Ok(LimitCheck { rows, monotone })
}

struct Outputs {
    dir: PathBuf,
    files: Vec<PathBuf>,
}

impl Outputs {
    fn create(&mut self, name: &str) -> Result<BufWriter<File>> {
        let p = self.dir.join(name);
        self.files.push(p.clone());
        Ok(BufWriter::new(File::create(p)?))
    }

    fn text(&mut self, name: &str, body: &str) -> Result<()> {
        let mut w = self.create(name)?;
        w.write_all(body.as_bytes())?;
        w.flush()?;
        Ok(())
    }
}

fn simulate(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    let g = grid(cfg)?;
    let u0 = initial_data(cfg, &g)?;
    let sol = solve_mild_with_diagnostics(&u0, &solver_config(cfg, cfg.alpha)?)?;
    let mut w = out.create("diagnostics.csv")?;
    write_diagnostics_csv(&mut w, &sol.diagnostics)?;
    w.flush()?;
    let times = sol.trajectory.times();
    for (n, f) in sol.trajectory.fields().iter().enumerate() {
        let last = n == times.steps();
        if last || (cfg.snapshot_every > 0 && n % cfg.snapshot_every == 0) {
            let mut w = out.create(&format!("field_{n:06}.bin"))?;
            write_field(&mut w, f, times.time(n))?;
            w.flush()?;
        }
    }
    Ok(())
}

fn run_limit_check(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    let lc = limit_check(cfg)?;
    let mut s = String::from("alpha,gap\n");
    for r in &lc.rows {
        writeln!(s, "{},{}", r.alpha, fmt(r.gap)).unwrap();
    }
    out.text("limit_check.csv", &s)
}

fn uniqueness(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    let g = grid(cfg)?;
    let u0 = initial_data(cfg, &g)?;
    let scfg = solver_config(cfg, cfg.alpha)?;
    let (a, b) = picard_pair(&u0, &scfg, &PicardInit::LinearOnly, &PicardInit::Zero)?;
    let metric = uniqueness_metric(&a, &b, cfg.t_end)?;
    let sup = a.sup_l2_distance(&b)?;
    let bound = (10.0 * scfg.picard_tol).powi(4) * cfg.t_end * g.volume();
    let body = format!(
        "alpha,t_end,picard_tol,sup_l2_distance,uniqueness_metric,bound\n{},{},{},{},{},{}\n",
        cfg.alpha,
        cfg.t_end,
        scfg.picard_tol,
        fmt(sup),
        fmt(metric),
        fmt(bound)
    );
    out.text("uniqueness.csv", &body)
}

fn estimates(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    let e = &cfg.estimates;
    let mut rng = ChaCha8Rng::seed_from_u64(e.seed);
    let mut reports = Vec::new();
    // power inequality sweep, summarized by its worst ratio
    let mut worst = EstimateReport::new(0.0, 1.0, "power sweep");
    let mut all_hold = true;
    for _ in 0..e.power_samples {
        let a = rng.gen_range(0.0..10.0);
        let b = rng.gen_range(0.0..10.0);
        let beta = rng.gen_range(1.0..6.0);
        let r = power_inequality_check(a, b, beta)?;
        all_hold &= r.holds;
        if r.ratio > worst.ratio {
            worst = r;
        }
    }
    worst.holds = all_hold;
    worst.context = format!("power sweep worst of {}", e.power_samples);
    reports.push(worst);

    let g = grid(cfg)?;
    let n = g.dim() as f64;
    if e.p >= 1.0 && e.p < n {
        let u0 = initial_data(cfg, &g)?;
        let mut r = gns_ratio(&u0.to_physical(), e.p, &g)?;
        r.context = format!("gns initial data p={}", e.p);
        reports.push(r);
    }

    let scfg = solver_config(cfg, cfg.alpha)?;
    let spec = NormSpec::new(2.0, e.q, cfg.t_end)?;
    let mut ratios = Vec::new();
    for i in 0..e.ensemble {
        let h = random_forcing(&g, scfg.time, e.band, &mut rng)?;
        let mut r = maximal_regularity_ratio(&h, &scfg, spec)?;
        r.context = format!("maximal regularity member {i}");
        ratios.push(r.ratio);
        reports.push(r);
    }
    let (lo, hi) = ratios.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &x| (l.min(x), h.max(x)));
    let mut spread = EstimateReport::new(hi, 10.0 * lo, "maximal regularity spread max <= 10 min");
    spread.ratio = hi / lo;
    reports.push(spread);

    if e.p > 1.0 && e.p < n {
        let rows = (0..g.dim())
            .map(|_| random_forcing(&g, scfg.time, e.band, &mut rng))
            .collect::<Result<Vec<Trajectory>>>()?;
        let (a, b) = lemma2_ratios(&rows, &scfg, e.p, e.q)?;
        reports.push(a);
        reports.push(b);
    }
    let mut w = out.create("estimates.csv")?;
    write_reports_csv(&mut w, &reports)?;
    w.flush()?;
    Ok(())
}

fn gronwall(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    if cfg.alpha >= 1.0 {
        return Err(config_err("alpha", "gronwall-check needs alpha < 1"));
    }
    let g = grid(cfg)?;
    let u0 = initial_data(cfg, &g)?;
    let scfg = solver_config(cfg, cfg.alpha)?;
    let a = solve_mild(&u0, &scfg)?;
    let b = solve_mild(&u0.scale(1.0 + cfg.gronwall.delta), &scfg)?;
    let times = scfg.time;
    let diff: Vec<f64> = a
        .fields()
        .iter()
        .zip(b.fields())
        .map(|(x, y)| Ok(x.sub(y)?.l2_norm()))
        .collect::<Result<_>>()?;
    let u = SampledSignal::new(times, diff.clone())?;
    let v = SampledSignal::new(times, vec![diff[0]; times.len()])?;
    let psi = SampledSignal::from_fn(times, |t| t)?;
    let c = fit_gronwall_coefficient(&u, &v, &psi, cfg.alpha)?;
    let input = GronwallInput { u, v, g: SampledSignal::new(times, vec![c; times.len()])?, alpha: cfg.alpha, psi };
    let report = gronwall_check(&input, cfg.t_end)?;
    let mut w = out.create("gronwall.csv")?;
    report.write_csv(&mut w)?;
    w.flush()?;
    Ok(())
}

fn specfun(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    let s = &cfg.specfun;
    let policy = ml_policy(cfg);
    let mut body = String::new();
    match s.function {
        SpecialFunction::MittagLeffler => {
            body.push_str("alpha,beta,z,value\n");
            for &a in &s.alphas {
                for &b in &s.betas {
                    let p = MLParams::new(a, b).map_err(|e| config_err("specfun", e.to_string()))?;
                    for &z in &s.z {
                        writeln!(body, "{a},{b},{z},{}", fmt(mittag_leffler(p, z, policy)?)).unwrap();
                    }
                }
            }
        }
        SpecialFunction::Mainardi => {
            body.push_str("alpha,beta,z,value\n");
            for &a in &s.alphas {
                for &z in &s.z {
                    writeln!(body, "{a},,{z},{}", fmt(mainardi(a, z, policy)?)).unwrap();
                }
            }
        }
        SpecialFunction::Gamma => {
            body.push_str("alpha,beta,z,value\n");
            for &z in &s.z {
                writeln!(body, ",,{z},{}", fmt(gamma_fn(z)?)).unwrap();
            }
        }
        SpecialFunction::MainardiMoment => {
            body.push_str("alpha,beta,z,value,closed_form\n");
            for &a in &s.alphas {
                for &r in &s.z {
                    let (num, closed) = mainardi_moment(a, r)?;
                    writeln!(body, "{a},,{r},{},{}", fmt(num), fmt(closed)).unwrap();
                }
            }
        }
    }
    out.text("specfun.csv", &body)
}

/// Reads `t,value` rows (with header) sampled uniformly from t = 0.
pub fn read_signal_csv(path: &Path) -> Result<SampledSignal> {
    let key = "fracops.input";
    let f = File::open(path).map_err(|e| config_err(key, format!("{}: {e}", path.display())))?;
    let mut ts = Vec::new();
    let mut vs = Vec::new();
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || (i == 0 && line.starts_with(|c: char| c.is_alphabetic())) {
            continue;
        }
        let mut it = line.split(',');
        let parse = |x: Option<&str>| -> Result<f64> {
            x.and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| config_err(key, format!("line {}: expected `t,value`", i + 1)))
        };
        ts.push(parse(it.next())?);
        vs.push(parse(it.next())?);
    }
    if ts.len() < 2 || ts[0] != 0.0 {
        return Err(config_err(key, "need at least two samples starting at t = 0"));
    }
    let steps = ts.len() - 1;
    let grid = TimeGrid::new(ts[steps], steps)?;
    let dt = grid.dt();
    if ts.iter().enumerate().any(|(k, &t)| (t - k as f64 * dt).abs() > 1e-9 * grid.t_end()) {
        return Err(config_err(key, "samples are not uniformly spaced"));
    }
    SampledSignal::new(grid, vs)
}

fn fracops(cfg: &ExperimentConfig, out: &mut Outputs) -> Result<()> {
    let path = cfg
        .fracops
        .input
        .as_ref()
        .ok_or_else(|| config_err("fracops.input", "path to a `t,value` CSV is required"))?;
    let h = read_signal_csv(path)?;
    let r = match cfg.fracops.operator {
        FracOperator::Caputo => caputo_derivative(&h, cfg.alpha),
        FracOperator::RiemannLiouville => rl_integral(&h, cfg.alpha),
    }
    .map_err(|e| config_err("alpha", e.to_string()))?;
    let mut body = String::from("t,value\n");
    for (t, v) in r.grid().times().iter().zip(r.values()) {
        writeln!(body, "{},{}", fmt(*t), fmt(*v)).unwrap();
    }
    out.text("fracops.csv", &body)
}

/// Runs the configured experiment, writing CSVs, snapshots, the resolved
/// config (after overrides), the original config text and a manifest into
/// `cfg.output_dir`.
pub fn run(cfg: &ExperimentConfig, raw_config: &str) -> Result<RunOutcome> {
    let experiment = cfg.experiment.ok_or_else(|| config_err("experiment", "no experiment selected"))?;
    cfg.validate()?;
    let start = Instant::now();
    fs::create_dir_all(&cfg.output_dir)?;
    let mut out = Outputs { dir: cfg.output_dir.clone(), files: Vec::new() };
    match experiment {
        Experiment::Simulate => simulate(cfg, &mut out)?,
        Experiment::LimitCheck => run_limit_check(cfg, &mut out)?,
        Experiment::Uniqueness => uniqueness(cfg, &mut out)?,
        Experiment::Estimates => estimates(cfg, &mut out)?,
        Experiment::GronwallCheck => gronwall(cfg, &mut out)?,
        Experiment::Specfun => specfun(cfg, &mut out)?,
        Experiment::Fracops => fracops(cfg, &mut out)?,
    }
    out.text("config.toml", &cfg.to_toml())?;
    if !raw_config.is_empty() {
        out.text("config.source.toml", raw_config)?;
    }
    let manifest = super::manifest::Manifest::new(experiment, cfg, start.elapsed().as_secs_f64(), &out.files, &out.dir);
    out.text("manifest.toml", &manifest.to_toml())?;
    Ok(RunOutcome { output_dir: out.dir, files: out.files })
}
