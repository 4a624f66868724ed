//! Command-line front end.
//!
//! Five subcommands cover the workflow: `simulate` evolves the walk and dumps
//! the position distribution, `limit` tabulates the long-time density,
//! `compare` puts the two side by side, `spectrum` tabulates the momentum
//! bands, and `delta` reports the localized atom mass. Output is CSV with
//! `#`-prefixed metadata (or JSON via `--format json`), deterministic down to
//! the byte for a fixed configuration.

use std::fmt::Write as FmtWrite;
use std::fs;
use std::io::{self, Write as IoWrite};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::coin::CoinParameters;
use crate::error::Error;
use crate::limit::{compare_windowed, LimitDensityModel};
use crate::measurement::{distribution, gap_mass};
use crate::spectral::{delta_mass, SpectralPoint, MAX_NODES};
use crate::walk::{evolve, InitialState, Schedule, WalkState};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Three-state quantum walk on the line with a 3-periodic coin schedule.
#[derive(Parser, Debug)]
#[command(name = "triwalk", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evolve the walk and emit the position distribution
    Simulate(SimulateArgs),
    /// Tabulate the long-time rescaled-position density
    Limit(LimitArgs),
    /// Compare a finite-time simulation against the long-time approximation
    Compare(CompareArgs),
    /// Tabulate dispersion, group velocities, and band overlaps over momentum
    Spectrum(SpectrumArgs),
    /// Report the localized atom mass and its quadrature convergence
    Delta(DeltaArgs),
}

#[derive(Args, Debug)]
pub struct ModelArgs {
    /// Coin angle: `grover`, a decimal in radians, or a pi-rational like `5pi/6`
    #[arg(long, default_value = "grover")]
    pub theta: String,
    /// Initial spin: three reals `a,b,g` (tokens like `1/sqrt3` allowed) or six
    /// components `a_re,a_im,b_re,b_im,g_re,g_im`; must be normalized within 1e-9
    #[arg(long, default_value = "1/sqrt3,1/sqrt3,1/sqrt3", allow_hyphen_values = true)]
    pub init: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Write to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Number of steps to evolve
    #[arg(long)]
    pub time: u64,
    /// Which residue of t mod 3 skips the coin: main (t=2 mod 3), skip0, skip1
    #[arg(long, default_value = "main")]
    pub schedule: Schedule,
    /// Emit a t,x,probability series sampled every STRIDE steps instead of one snapshot
    #[arg(long, value_name = "STRIDE")]
    pub series: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Grid points per support interval
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
    /// Momentum node cap for the atom-mass quadrature
    #[arg(long, default_value_t = MAX_NODES)]
    pub nodes: usize,
    /// Emit lattice-site approximate probabilities x,approx_prob at this time
    /// instead of the rescaled density grid
    #[arg(long, value_name = "T")]
    pub approx_at_time: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Simulation time (>= 50 so the asymptotic regime is meaningful)
    #[arg(long)]
    pub time: u64,
    /// Sliding-window width in sites (rounded up to odd)
    #[arg(long, default_value_t = 11)]
    pub window: usize,
    /// Smallest |window center| compared, skipping the localized peak
    #[arg(long, default_value_t = 30)]
    pub min_abs_x: i64,
    /// Momentum node cap for the atom-mass quadrature
    #[arg(long, default_value_t = MAX_NODES)]
    pub nodes: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Number of momentum samples across (-pi, pi)
    #[arg(long, default_value_t = 1024)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Momentum node cap for the quadrature
    #[arg(long, default_value_t = MAX_NODES)]
    pub nodes: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A failure destined for the process exit status: 2 for bad input,
/// 3 for numerical non-convergence.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_input_error() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Parses the angle argument: `grover`, a plain decimal in radians, or a
/// pi-rational expression such as `5pi/6`, `pi/2`, `-pi/3`, `0.75pi`, `2pi`.
pub fn parse_theta(raw: &str) -> Result<CoinParameters, Failure> {
    let token: String = raw
        .trim()
        .to_ascii_lowercase()
        .replace('\u{03c0}', "pi")
        .replace([' ', '*'], "");
    if token == "grover" {
        return Ok(CoinParameters::grover());
    }
    let value = if let Some(pos) = token.find("pi") {
        let (pre, post) = (&token[..pos], &token[pos + 2..]);
        let numer = match pre {
            "" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| bad_input(format!("cannot parse angle '{raw}'")))?,
        };
        let denom = match post.strip_prefix('/') {
            None if post.is_empty() => 1.0,
            Some(d) => d
                .parse::<f64>()
                .map_err(|_| bad_input(format!("cannot parse angle '{raw}'")))?,
            None => return Err(bad_input(format!("cannot parse angle '{raw}'"))),
        };
        numer * std::f64::consts::PI / denom
    } else {
        token
            .parse::<f64>()
            .map_err(|_| bad_input(format!("cannot parse angle '{raw}'")))?
    };
    Ok(CoinParameters::new(value)?)
}

/// Parses one real token: a decimal, a fraction, or forms with square roots
/// such as `1/sqrt3`, `sqrt2/2`, `-1/sqrt(2)`.
fn parse_real_token(raw: &str) -> Option<f64> {
    fn atom(s: &str) -> Option<f64> {
        let s = s.trim();
        if let Some(r) = s.strip_prefix("sqrt") {
            let inner = r.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(r);
            let v = inner.parse::<f64>().ok()?;
            return (v >= 0.0).then(|| v.sqrt());
        }
        s.parse::<f64>().ok()
    }
    let mut t = raw.trim().replace('\u{221a}', "sqrt");
    let mut sign = 1.0;
    while let Some(rest) = t.strip_prefix(['+', '-']) {
        if t.starts_with('-') {
            sign = -sign;
        }
        t = rest.to_string();
    }
    let v = match t.split_once('/') {
        Some((num, den)) => atom(num)? / atom(den)?,
        None => atom(&t)?,
    };
    Some(sign * v)
}

/// Parses the `--init` argument and enforces normalization within 1e-9
/// before rescaling exactly.
pub fn parse_init(raw: &str) -> Result<InitialState, Failure> {
    let parts: Vec<f64> = raw
        .split(',')
        .map(parse_real_token)
        .collect::<Option<Vec<f64>>>()
        .ok_or_else(|| bad_input(format!("cannot parse initial state '{raw}'")))?;
    let [a, b, g] = match parts.as_slice() {
        [x, y, z] => [
            crate::linalg::Complex64::new(*x, 0.0),
            crate::linalg::Complex64::new(*y, 0.0),
            crate::linalg::Complex64::new(*z, 0.0),
        ],
        [xr, xi, yr, yi, zr, zi] => [
            crate::linalg::Complex64::new(*xr, *xi),
            crate::linalg::Complex64::new(*yr, *yi),
            crate::linalg::Complex64::new(*zr, *zi),
        ],
        _ => {
            return Err(bad_input(format!(
                "--init takes 3 reals or 6 components, got {} values",
                parts.len()
            )))
        }
    };
    let norm = (a.norm_sqr() + b.norm_sqr() + g.norm_sqr()).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(bad_input(format!(
            "initial state has norm {norm:?}, expected 1 within 1e-9"
        )));
    }
    Ok(InitialState::normalized(a, b, g)?)
}

fn fmt_complex(z: crate::linalg::Complex64) -> String {
    if z.im >= 0.0 {
        format!("{:?}+{:?}i", z.re, z.im)
    } else {
        format!("{:?}-{:?}i", z.re, -z.im)
    }
}

/// The `# key = value` metadata block shared by all CSV outputs.
fn meta_block(command: &str, params: &CoinParameters, init: &InitialState) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# triwalk v{VERSION}");
    let _ = writeln!(s, "# command = {command}");
    let _ = writeln!(s, "# theta = {:?}", params.theta());
    let _ = writeln!(
        s,
        "# init = {},{},{}",
        fmt_complex(init.alpha()),
        fmt_complex(init.beta()),
        fmt_complex(init.gamma())
    );
    s
}

fn meta_json(command: &str, params: &CoinParameters, init: &InitialState) -> serde_json::Value {
    json!({
        "tool": format!("triwalk v{VERSION}"),
        "command": command,
        "theta": params.theta(),
        "init": [
            [init.alpha().re, init.alpha().im],
            [init.beta().re, init.beta().im],
            [init.gamma().re, init.gamma().im],
        ],
    })
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| bad_input(format!("cannot write {}: {e}", path.display()))),
        None => {
            io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| bad_input(format!("cannot write stdout: {e}")))?;
            Ok(())
        }
    }
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), Failure> {
    let params = parse_theta(&args.model.theta)?;
    let init = parse_init(&args.model.init)?;
    let mut content = String::new();
    match (args.output.format, args.series) {
        (Format::Csv, None) => {
            let state = evolve(&init, &params, args.schedule, args.time);
            let dist = distribution(&state);
            content.push_str(&meta_block("simulate", &params, &init));
            let _ = writeln!(content, "# schedule = {}", args.schedule);
            let _ = writeln!(content, "# time = {}", args.time);
            content.push_str("x,probability\n");
            for (x, p) in dist.iter() {
                let _ = writeln!(content, "{x},{p:?}");
            }
        }
        (Format::Csv, Some(stride)) => {
            let stride = stride.max(1);
            content.push_str(&meta_block("simulate", &params, &init));
            let _ = writeln!(content, "# schedule = {}", args.schedule);
            let _ = writeln!(content, "# time = {}", args.time);
            let _ = writeln!(content, "# series_stride = {stride}");
            content.push_str("t,x,probability\n");
            for_each_snapshot(&init, &params, args.schedule, args.time, stride, |state| {
                let dist = distribution(state);
                for (x, p) in dist.iter() {
                    let _ = writeln!(content, "{},{x},{p:?}", state.time());
                }
            });
        }
        (Format::Json, None) => {
            let state = evolve(&init, &params, args.schedule, args.time);
            let dist = distribution(&state);
            let rows: Vec<_> = dist.iter().map(|(x, p)| json!([x, p])).collect();
            let doc = json!({
                "meta": meta_json("simulate", &params, &init),
                "schedule": args.schedule.label(),
                "time": args.time,
                "columns": ["x", "probability"],
                "rows": rows,
            });
            content = format!("{doc:#}\n");
        }
        (Format::Json, Some(stride)) => {
            let stride = stride.max(1);
            let mut rows = Vec::new();
            for_each_snapshot(&init, &params, args.schedule, args.time, stride, |state| {
                let dist = distribution(state);
                for (x, p) in dist.iter() {
                    rows.push(json!([state.time(), x, p]));
                }
            });
            let doc = json!({
                "meta": meta_json("simulate", &params, &init),
                "schedule": args.schedule.label(),
                "time": args.time,
                "series_stride": stride,
                "columns": ["t", "x", "probability"],
                "rows": rows,
            });
            content = format!("{doc:#}\n");
        }
    }
    write_output(&args.output.out, &content)
}

/// Runs the evolution once, invoking `visit` on the state at t = 0, stride,
/// 2*stride, ..., and always at the final time.
fn for_each_snapshot<F: FnMut(&WalkState)>(
    init: &InitialState,
    params: &CoinParameters,
    schedule: Schedule,
    time: u64,
    stride: u64,
    mut visit: F,
) {
    let coin = crate::coin::build_coin(params);
    let mut state = WalkState::from_initial(init);
    visit(&state);
    for t in 1..=time {
        state = state.step(&coin, schedule);
        if t % stride == 0 || t == time {
            visit(&state);
        }
    }
}

/// Midpoint grid over the connected components of the support union.
fn support_grid(model: &LimitDensityModel, per_interval: usize) -> Vec<f64> {
    let s = model.support();
    let components: Vec<(f64, f64)> = if s.gap().is_some() {
        vec![s.d2, s.d1]
    } else {
        vec![(s.d2.0, s.d1.1)]
    };
    let mut xs = Vec::new();
    for (lo, hi) in components {
        let step = (hi - lo) / per_interval as f64;
        for i in 0..per_interval {
            xs.push(lo + (i as f64 + 0.5) * step);
        }
    }
    xs
}

fn cmd_limit(args: &LimitArgs) -> Result<(), Failure> {
    let params = parse_theta(&args.model.theta)?;
    let init = parse_init(&args.model.init)?;
    if args.grid < 2 {
        return Err(bad_input("--grid must be at least 2"));
    }
    let model = LimitDensityModel::with_nodes(&init, &params, args.nodes)?;
    let s = model.support();
    let total = model.delta() + model.continuous_mass();
    let mut content = String::new();
    match (args.output.format, args.approx_at_time) {
        (Format::Csv, None) => {
            content.push_str(&meta_block("limit", &params, &init));
            let _ = writeln!(content, "# support_d1 = ({:?}, {:?})", s.d1.0, s.d1.1);
            let _ = writeln!(content, "# support_d2 = ({:?}, {:?})", s.d2.0, s.d2.1);
            let _ = writeln!(content, "# delta = {:?}", model.delta());
            let _ = writeln!(content, "# continuous_mass = {:?}", model.continuous_mass());
            let _ = writeln!(content, "# total_mass = {total:?}");
            content.push_str("x,density\n");
            for x in support_grid(&model, args.grid) {
                match model.continuous_density(x) {
                    Ok(d) => {
                        let _ = writeln!(content, "{x:?},{d:?}");
                    }
                    // a grid point landing on a divergent interval endpoint
                    // is skipped rather than aborting the whole table
                    Err(Error::EndpointSingularity { .. }) => {
                        let _ = writeln!(content, "# skipped x = {x:?}: endpoint");
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        (Format::Csv, Some(t)) => {
            let t = t.max(1);
            content.push_str(&meta_block("limit", &params, &init));
            let _ = writeln!(content, "# delta = {:?}", model.delta());
            let _ = writeln!(content, "# approx_at_time = {t}");
            content.push_str("x,approx_prob\n");
            let x_max = (s.speed() * t as f64).floor() as i64 + 2;
            for x in -x_max..=x_max {
                let p = model.approximate_prob(x, t)?;
                let _ = writeln!(content, "{x},{p:?}");
            }
        }
        (Format::Json, approx) => {
            let mut doc = json!({
                "meta": meta_json("limit", &params, &init),
                "support": {"d1": [s.d1.0, s.d1.1], "d2": [s.d2.0, s.d2.1]},
                "delta": model.delta(),
                "continuous_mass": model.continuous_mass(),
                "total_mass": total,
            });
            match approx {
                None => {
                    let mut rows = Vec::new();
                    for x in support_grid(&model, args.grid) {
                        match model.continuous_density(x) {
                            Ok(d) => rows.push(json!([x, d])),
                            Err(Error::EndpointSingularity { .. }) => {}
                            Err(e) => return Err(e.into()),
                        }
                    }
                    doc["columns"] = json!(["x", "density"]);
                    doc["rows"] = json!(rows);
                }
                Some(t) => {
                    let t = t.max(1);
                    let x_max = (s.speed() * t as f64).floor() as i64 + 2;
                    let mut rows = Vec::new();
                    for x in -x_max..=x_max {
                        rows.push(json!([x, model.approximate_prob(x, t)?]));
                    }
                    doc["approx_at_time"] = json!(t);
                    doc["columns"] = json!(["x", "approx_prob"]);
                    doc["rows"] = json!(rows);
                }
            }
            content = format!("{doc:#}\n");
        }
    }
    write_output(&args.output.out, &content)
}

fn cmd_compare(args: &CompareArgs) -> Result<(), Failure> {
    if args.time < 50 {
        return Err(bad_input(format!(
            "--time must be >= 50 for a meaningful comparison, got {}",
            args.time
        )));
    }
    let params = parse_theta(&args.model.theta)?;
    let init = parse_init(&args.model.init)?;
    let model = LimitDensityModel::with_nodes(&init, &params, args.nodes)?;
    let state = evolve(&init, &params, Schedule::SkipAt2, args.time);
    let dist = distribution(&state);
    let cmp = compare_windowed(&dist, &model, args.window, args.min_abs_x)?;

    // Gap-window bookkeeping: simulated mass via the distribution, predicted
    // mass via the approximation over the same cells (identically zero when
    // the support has a true gap).
    let gap = gap_mass(&dist, &params, None)?;
    let approx_gap_mass = match gap.window {
        Some((_, hi)) => {
            let t = args.time as f64;
            let mut total = 0.0;
            let mut x = gap.x_min;
            while (x as f64) < hi * t {
                total += model.approximate_prob(x, args.time)?;
                total += model.approximate_prob(-x, args.time)?;
                x += 1;
            }
            Some(total)
        }
        None => None,
    };

    let summary = json!({
        "time": args.time,
        "theta": params.theta(),
        "window_width": 2 * (args.window / 2) + 1,
        "min_abs_x": args.min_abs_x,
        "rows": cmp.rows.len(),
        "mean_abs_gap": cmp.mean_abs_gap,
        "max_abs_gap": cmp.max_abs_gap,
        "gap_window": gap.window.map(|(lo, hi)| json!([lo, hi])),
        "gap_x_min": gap.x_min,
        "sim_gap_window_mass": gap.window.map(|_| gap.mass),
        "approx_gap_window_mass": approx_gap_mass,
    });

    let mut content = String::new();
    match args.output.format {
        Format::Csv => {
            content.push_str(&meta_block("compare", &params, &init));
            let _ = writeln!(content, "# time = {}", args.time);
            let _ = writeln!(content, "# window_width = {}", 2 * (args.window / 2) + 1);
            let _ = writeln!(content, "# min_abs_x = {}", args.min_abs_x);
            content.push_str("center,simulated,approximate,abs_gap\n");
            for row in &cmp.rows {
                let _ = writeln!(
                    content,
                    "{},{:?},{:?},{:?}",
                    row.center, row.simulated, row.approximate, row.abs_gap
                );
            }
            let _ = writeln!(content, "# summary = {summary}");
        }
        Format::Json => {
            let rows: Vec<_> = cmp
                .rows
                .iter()
                .map(|r| json!([r.center, r.simulated, r.approximate, r.abs_gap]))
                .collect();
            let doc = json!({
                "meta": meta_json("compare", &params, &init),
                "columns": ["center", "simulated", "approximate", "abs_gap"],
                "rows": rows,
                "summary": summary,
            });
            content = format!("{doc:#}\n");
        }
    }
    write_output(&args.output.out, &content)?;
    // When the table goes to a file, the summary still lands on stdout so
    // pipelines can consume it without re-parsing the CSV.
    if args.output.out.is_some() {
        println!("{summary}");
    }
    Ok(())
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<(), Failure> {
    let params = parse_theta(&args.model.theta)?;
    let init = parse_init(&args.model.init)?;
    if args.grid < 2 {
        return Err(bad_input("--grid must be at least 2"));
    }
    let n = args.grid;
    let mut content = String::new();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for i in 0..n {
        let k = -std::f64::consts::PI
            + (i as f64 + 0.5) * (2.0 * std::f64::consts::PI / n as f64);
        match SpectralPoint::compute(k, &params) {
            Ok(point) => {
                let overlaps = point.overlaps(&init);
                rows.push((k, crate::spectral::dispersion_g(k, &params), point, overlaps));
            }
            Err(e) => skipped.push((k, e.to_string())),
        }
    }
    match args.output.format {
        Format::Csv => {
            content.push_str(&meta_block("spectrum", &params, &init));
            let _ = writeln!(content, "# grid = {n}");
            for (k, reason) in &skipped {
                let _ = writeln!(content, "# skipped k = {k:?}: {reason}");
            }
            content.push_str("k,g,h2,h3,overlap1,overlap2,overlap3\n");
            for (k, g, point, overlaps) in &rows {
                let _ = writeln!(
                    content,
                    "{k:?},{g:?},{:?},{:?},{:?},{:?},{:?}",
                    point.velocities[0],
                    point.velocities[1],
                    overlaps[0],
                    overlaps[1],
                    overlaps[2]
                );
            }
        }
        Format::Json => {
            let json_rows: Vec<_> = rows
                .iter()
                .map(|(k, g, point, overlaps)| {
                    json!([
                        k,
                        g,
                        point.velocities[0],
                        point.velocities[1],
                        overlaps[0],
                        overlaps[1],
                        overlaps[2]
                    ])
                })
                .collect();
            let doc = json!({
                "meta": meta_json("spectrum", &params, &init),
                "grid": n,
                "columns": ["k", "g", "h2", "h3", "overlap1", "overlap2", "overlap3"],
                "skipped": skipped
                    .iter()
                    .map(|(k, r)| json!([k, r]))
                    .collect::<Vec<_>>(),
                "rows": json_rows,
            });
            content = format!("{doc:#}\n");
        }
    }
    write_output(&args.output.out, &content)
}

fn cmd_delta(args: &DeltaArgs) -> Result<(), Failure> {
    let params = parse_theta(&args.model.theta)?;
    let init = parse_init(&args.model.init)?;
    let d = delta_mass(&init, &params, args.nodes)?;
    let mut content = String::new();
    match args.output.format {
        Format::Csv => {
            content.push_str(&meta_block("delta", &params, &init));
            content.push_str("delta,nodes,estimate\n");
            let _ = writeln!(content, "{:?},{},{:?}", d.value, d.nodes, d.estimate);
        }
        Format::Json => {
            let doc = json!({
                "meta": meta_json("delta", &params, &init),
                "delta": d.value,
                "nodes": d.nodes,
                "estimate": d.estimate,
            });
            content = format!("{doc:#}\n");
        }
    }
    write_output(&args.output.out, &content)
}

pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Simulate(args) => cmd_simulate(args),
        Command::Limit(args) => cmd_limit(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Delta(args) => cmd_delta(args),
    }
}

/// Entry point for the `triwalk` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
