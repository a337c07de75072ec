use std::fmt;
use std::fs;
use std::io::Write as _;

use qdot::reference::{compare_levels, CellStatus, TABLE};
use qdot::units::{to_dimensionless, Dimensionless, PhysicalInputs};
use qdot::wavefunction::sample_radial;
use qdot::{find_spectrum, normalize, solve_coefficients, DotParameters, EnergySpectrum, QuadratureSpec, ScanSpec};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::{energy, sample, sig, Csv};
use crate::{Cli, Command, Format, GlobalOpts, ProblemArgs, SweepArgs, TableArgs, WavefunctionArgs};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Numerical(String),
    BadLevel(String),
    TableMismatch(usize),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numerical(_) | Failure::Io(_) => 3,
            Failure::BadLevel(_) => 4,
            Failure::TableMismatch(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(s) => write!(f, "usage: {s}"),
            Failure::Numerical(s) => write!(f, "numerical failure: {s}"),
            Failure::BadLevel(s) => write!(f, "{s}"),
            Failure::TableMismatch(n) => write!(f, "{n} table cells deviate from the reference"),
            Failure::Io(s) => write!(f, "i/o: {s}"),
        }
    }
}

impl From<qdot::Error> for Failure {
    fn from(e: qdot::Error) -> Self {
        match e {
            qdot::Error::InvalidParameters(s) => Failure::Usage(s),
            other => Failure::Numerical(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    if g.grid < 100 {
        return Err(Failure::Usage(format!("--grid {} is below 100", g.grid)));
    }
    if !(g.tol > 0.0) {
        return Err(Failure::Usage(format!("--tol {} must be positive", g.tol)));
    }
    match &cli.command {
        Command::Spectrum(a) => spectrum(g, &a.problem),
        Command::Wavefunction(a) => wavefunction(g, a),
        Command::Table(a) => table(g, a),
        Command::Sweep(a) => sweep(g, a),
    }
}

fn scan_spec(g: &GlobalOpts) -> ScanSpec {
    ScanSpec { grid_points: g.grid, refine_tol: g.tol, ..ScanSpec::default() }
}

fn emit(g: &GlobalOpts, text: &str) -> Outcome {
    match &g.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn pool(g: &GlobalOpts) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new().num_threads(g.jobs).build().map_err(|e| Failure::Io(e.to_string()))
}

/// Dimensionless parameters, plus the unit conversion in physical mode.
fn problem(p: &ProblemArgs) -> Result<(DotParameters, Option<Dimensionless>), Failure> {
    if p.physical {
        let inputs = PhysicalInputs {
            effective_mass: p.mass.unwrap_or(f64::NAN),
            dot_radius: p.radius.unwrap_or(f64::NAN),
            well_depth: p.depth.unwrap_or(f64::NAN),
            rashba_coefficient: p.rashba.unwrap_or(f64::NAN),
        };
        let d = to_dimensionless(&inputs)?;
        Ok((DotParameters::new(d.v, d.beta, p.m)?, Some(d)))
    } else {
        let (v, beta) = (p.v.unwrap_or(f64::NAN), p.beta.unwrap_or(f64::NAN));
        Ok((DotParameters::new(v, beta, p.m)?, None))
    }
}

fn spectrum(g: &GlobalOpts, args: &ProblemArgs) -> Outcome {
    let (params, units) = problem(args)?;
    let s = find_spectrum(&params, &scan_spec(g))?;
    let text = match g.format {
        Format::Csv => spectrum_csv(&s, units.as_ref()),
        Format::Json => json_text(&spectrum_json(&s)),
    };
    emit(g, &text)
}

fn spectrum_csv(s: &EnergySpectrum, units: Option<&Dimensionless>) -> String {
    let mut csv = match units {
        Some(_) => Csv::new(&["index", "e", "E_meV"]),
        None => Csv::new(&["index", "e"]),
    };
    for (i, &e) in s.levels.iter().enumerate() {
        match units {
            Some(d) => csv.row(&[i.to_string(), energy(e), energy(d.to_mev(e))]),
            None => csv.row(&[i.to_string(), energy(e)]),
        }
    }
    csv.finish()
}

#[derive(Serialize)]
struct Params {
    v: f64,
    beta: f64,
    m: i32,
}

impl From<&DotParameters> for Params {
    fn from(p: &DotParameters) -> Self {
        Params { v: p.v, beta: p.beta, m: p.m }
    }
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    params: Params,
    window: [f64; 2],
    levels: &'a [f64],
    diagnostics: &'a [f64],
}

fn spectrum_json(s: &EnergySpectrum) -> SpectrumJson<'_> {
    SpectrumJson {
        params: (&s.params).into(),
        window: [s.window.0, s.window.1],
        levels: &s.levels,
        diagnostics: &s.diagnostics,
    }
}

#[derive(Serialize)]
struct Sample {
    r: f64,
    u: f64,
    w: f64,
}

#[derive(Serialize)]
struct CoefficientsJson {
    c1: f64,
    c2: f64,
    d1: f64,
    d2: f64,
}

#[derive(Serialize)]
struct WavefunctionJson {
    params: Params,
    e: f64,
    coefficients: CoefficientsJson,
    samples: Vec<Sample>,
}

fn wavefunction(g: &GlobalOpts, a: &WavefunctionArgs) -> Outcome {
    let (params, _) = problem(&a.problem)?;
    if a.samples < 2 || !(a.rmax > 0.0) {
        return Err(Failure::Usage(format!("--samples {} --rmax {}", a.samples, a.rmax)));
    }
    let levels = find_spectrum(&params, &scan_spec(g))?.levels;
    let e = match (a.level, a.energy) {
        (Some(i), _) => *levels
            .get(i)
            .ok_or_else(|| Failure::BadLevel(format!("level {i} out of range: {} levels found", levels.len())))?,
        (None, Some(target)) => levels
            .iter()
            .copied()
            .filter(|e| (e - target).abs() <= a.energy_tol)
            .min_by(|x, y| (x - target).abs().total_cmp(&(y - target).abs()))
            .ok_or_else(|| Failure::BadLevel(format!("no level within {} of {target}", a.energy_tol)))?,
        (None, None) => *levels.first().ok_or_else(|| Failure::BadLevel("no bound state".to_string()))?,
    };
    let state = normalize(&solve_coefficients(&params, e)?, &QuadratureSpec::default())?;
    let c = state.coefficients;
    eprintln!("e = {}", sig(e, 12));
    eprintln!("c1 = {}\nc2 = {}\nd1 = {}\nd2 = {}", sig(c.c1, 12), sig(c.c2, 12), sig(c.d1, 12), sig(c.d2, 12));

    let samples = sample_radial(&state, a.rmax, a.samples)?;
    let text = match g.format {
        Format::Csv => {
            let mut csv = Csv::new(&["r", "u", "w"]);
            for s in &samples {
                csv.row(&[sample(s.r), sample(s.u), sample(s.w)]);
            }
            csv.finish()
        }
        Format::Json => json_text(&WavefunctionJson {
            params: (&params).into(),
            e,
            coefficients: CoefficientsJson { c1: c.c1, c2: c.c2, d1: c.d1, d2: c.d2 },
            samples: samples.iter().map(|s| Sample { r: s.r, u: s.u, w: s.w }).collect(),
        }),
    };
    emit(g, &text)
}

#[derive(Serialize)]
struct TableCell {
    m: i32,
    v: f64,
    beta: f64,
    level_index: usize,
    e: Option<f64>,
    reference: Option<f64>,
    status: &'static str,
}

fn table(g: &GlobalOpts, a: &TableArgs) -> Outcome {
    if !(a.match_tol >= 0.0) {
        return Err(Failure::Usage(format!("--match-tol {}", a.match_tol)));
    }
    let spec = scan_spec(g);
    let spectra: Vec<Result<Vec<f64>, qdot::Error>> = pool(g)?.install(|| {
        TABLE
            .par_iter()
            .map(|row| Ok(find_spectrum(&DotParameters::new(row.v, row.beta(), row.m)?, &spec)?.levels))
            .collect()
    });

    let mut cells = Vec::new();
    for (row, levels) in TABLE.iter().zip(spectra) {
        for c in compare_levels(&levels?, row.levels, a.match_tol) {
            cells.push(TableCell {
                m: row.m,
                v: row.v,
                beta: row.beta(),
                level_index: c.index,
                e: c.computed,
                reference: c.reference,
                status: c.status.as_str(),
            });
        }
    }
    let bad = cells.iter().filter(|c| c.status != CellStatus::Ok.as_str()).count();

    let text = match g.format {
        Format::Csv => {
            let mut csv = Csv::new(&["m", "v", "beta", "level_index", "e", "reference", "status"]);
            let opt = |x: Option<f64>, f: fn(f64) -> String| x.map(f).unwrap_or_default();
            for c in &cells {
                csv.row(&[
                    c.m.to_string(),
                    energy(c.v),
                    energy(c.beta),
                    c.level_index.to_string(),
                    opt(c.e, energy),
                    opt(c.reference, |r| format!("{r:.2}")),
                    c.status.to_string(),
                ]);
            }
            csv.finish()
        }
        Format::Json => json_text(&cells),
    };
    emit(g, &text)?;
    eprintln!("{} of {} cells match", cells.len() - bad, cells.len());
    if bad > 0 {
        Err(Failure::TableMismatch(bad))
    } else {
        Ok(())
    }
}

/// Parses `LO:HI:STEP` into the values `LO, LO + STEP, ...` up to `HI`.
pub fn parse_range(s: &str) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::Usage(format!("malformed range {s:?}, expected LO:HI:STEP"));
    let parts: Vec<f64> = s.split(':').map(|p| p.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let [lo, hi, step] = parts[..] else { return Err(bad()) };
    if !(lo.is_finite() && hi.is_finite() && step > 0.0 && hi >= lo) {
        return Err(bad());
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    if n > 100_000 {
        return Err(bad());
    }
    Ok((0..=n).map(|i| lo + step * i as f64).collect())
}

pub fn parse_m_list(s: &str) -> Result<Vec<i32>, Failure> {
    let out: Vec<i32> = s
        .split(',')
        .map(|p| p.trim().parse::<i32>().map_err(|_| Failure::Usage(format!("malformed m list {s:?}"))))
        .collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err(Failure::Usage("empty m list".to_string()));
    }
    Ok(out)
}

#[derive(Serialize)]
struct SweepRow {
    beta: f64,
    m: i32,
    level_index: usize,
    e: f64,
}

fn sweep(g: &GlobalOpts, a: &SweepArgs) -> Outcome {
    let betas = parse_range(&a.beta_range)?;
    let mut ms = parse_m_list(&a.m_list)?;
    ms.sort_unstable();
    ms.dedup();
    let spec = scan_spec(g);
    let jobs: Vec<(usize, i32)> = (0..betas.len()).flat_map(|b| ms.iter().map(move |&m| (b, m))).collect();
    let results: Vec<qdot::Result<(usize, i32, Vec<f64>)>> = pool(g)?.install(|| {
        jobs.par_iter()
            .map(|&(b, m)| Ok((b, m, find_spectrum(&DotParameters::new(a.v, betas[b], m)?, &spec)?.levels)))
            .collect()
    });
    let mut results = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    results.sort_by_key(|&(b, m, _)| (b, m));

    let rows: Vec<SweepRow> = results
        .iter()
        .flat_map(|(b, m, levels)| {
            let beta = betas[*b];
            levels.iter().enumerate().map(move |(i, &e)| SweepRow { beta, m: *m, level_index: i, e })
        })
        .collect();
    let text = match g.format {
        Format::Csv => {
            let mut csv = Csv::new(&["beta", "m", "level_index", "e"]);
            for r in &rows {
                csv.row(&[energy(r.beta), r.m.to_string(), r.level_index.to_string(), energy(r.e)]);
            }
            csv.finish()
        }
        Format::Json => json_text(&rows),
    };
    emit(g, &text)
}
