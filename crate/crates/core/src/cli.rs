//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed `--expect-classifier` check, 2 usage or
//! validation error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Field;
use crate::model::{ModelParams, RawParams, StrategyProfile};
use crate::regimes::{classify, sweep, uniform_grid};
use crate::report::{metrics_csv_row, num, regime_csv_header, regime_csv_row, METRICS_CSV_HEADER};
use crate::sim::{simulate, theoretical_metrics};
use crate::verifier::{find_equilibria, is_pbe};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EXPECTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "media-accountability",
    version,
    about = "Electoral accountability with mainstream propaganda and an alternative outlet"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one parameter point into its equilibrium regime.
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every point of a grid over one parameter.
    Sweep {
        #[command(flatten)]
        params: ParamArgs,
        /// Parameter to vary.
        #[arg(long, default_value = "phi")]
        vary: String,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List every pure symmetric PBE among the 32 candidate profiles.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Exit 1 unless the classifier's profile is among the equilibria.
        #[arg(long)]
        expect_classifier: bool,
    },
    /// Monte Carlo replications of one election, with the exact values alongside.
    Simulate {
        #[command(flatten)]
        params: ParamArgs,
        /// Number of replications.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// `classifier`, a named profile (listen, ignore, select-alt,
        /// retain-iff-ns, retain, remove) or a profile index 0-31.
        #[arg(long, default_value = "classifier")]
        profile: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Flat `key = value` file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub pi: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub uc: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[default]
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failure that maps onto an exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Settings read from `--config`.
#[derive(Debug, Default)]
struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    fn load(path: Option<&PathBuf>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn parse(text: &str) -> CliResult<Self> {
        let mut values = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                usage(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim().trim_start_matches("--").replace('_', "-");
            let key = if key == "u-c" { "uc".to_string() } else { key };
            const KNOWN: [&str; 13] = [
                "sigma", "pi", "q", "k", "s", "uc", "phi", "n", "seed", "vary", "from", "to",
                "steps",
            ];
            if !KNOWN.contains(&key.as_str()) {
                return Err(usage(format!(
                    "config line {}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(Self { values })
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| usage(format!("config key `{key}`: cannot parse `{v}`"))),
        }
    }
}

impl ParamArgs {
    fn flag(&self, field: Field) -> Option<f64> {
        match field {
            Field::Sigma => self.sigma,
            Field::Pi => self.pi,
            Field::Q => self.q,
            Field::K => self.k,
            Field::S => self.s,
            Field::Uc => self.uc,
            Field::Phi => self.phi,
        }
    }

    /// Merges flags over the config file. `fill` supplies a value for a
    /// field left unset (the swept field).
    fn resolve(&self, config: &ConfigFile, fill: Option<(Field, f64)>) -> CliResult<ModelParams> {
        let mut raw = RawParams {
            sigma: 0.0,
            pi: 0.0,
            q: 0.0,
            k: 0.0,
            s: 0.0,
            u_c: 0.0,
            phi: 0.0,
        };
        for field in Field::ALL {
            let value = match (self.flag(field), config.get::<f64>(field.name())?, fill) {
                (Some(v), _, _) | (None, Some(v), _) => v,
                (None, None, Some((f, v))) if f == field => v,
                _ => return Err(usage(format!("missing required parameter --{field}"))),
            };
            raw.set(field, value);
        }
        raw.validate().map_err(|e| {
            usage(format!(
                "invalid parameter --{}: {e}",
                e.field().map_or("?", Field::name)
            ))
        })
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, stderr) {
        Ok((code, text, out)) => {
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => {
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

type Outcome = (i32, String, Option<PathBuf>);

fn dispatch(command: Command, stderr: &mut dyn Write) -> CliResult<Outcome> {
    match command {
        Command::Classify { params, output } => {
            let config = ConfigFile::load(params.config.as_ref())?;
            let p = params.resolve(&config, None)?;
            Ok((
                EXIT_OK,
                run_classify(&p, output.format.unwrap_or_default()),
                output.out,
            ))
        }
        Command::Sweep {
            params,
            vary,
            from,
            to,
            steps,
            output,
        } => {
            let config = ConfigFile::load(params.config.as_ref())?;
            let vary = match config.get::<String>("vary")? {
                Some(v) if vary == "phi" => v,
                _ => vary,
            };
            let field: Field = vary
                .parse()
                .map_err(|e: crate::Error| usage(e.to_string()))?;
            let from = from.or(config.get("from")?).unwrap_or(0.0);
            let to = to.or(config.get("to")?).unwrap_or(1.0);
            let steps = steps.or(config.get("steps")?).unwrap_or(101);
            let grid = uniform_grid(from, to, steps).map_err(|e| usage(e.to_string()))?;
            let p = params.resolve(&config, Some((field, grid[0])))?;
            let text = run_sweep(
                &p,
                field,
                &grid,
                output.format.unwrap_or(Format::Csv),
                stderr,
            )?;
            Ok((EXIT_OK, text, output.out))
        }
        Command::Verify {
            params,
            expect_classifier,
        } => {
            let config = ConfigFile::load(params.config.as_ref())?;
            let p = params.resolve(&config, None)?;
            let (code, text) = run_verify(&p, expect_classifier);
            Ok((code, text, None))
        }
        Command::Simulate {
            params,
            n,
            seed,
            profile,
            output,
        } => {
            let config = ConfigFile::load(params.config.as_ref())?;
            let p = params.resolve(&config, None)?;
            let n = n
                .or(config.get("n")?)
                .ok_or_else(|| usage("missing required --n"))?;
            let seed = seed
                .or(config.get("seed")?)
                .ok_or_else(|| usage("missing required --seed"))?;
            let profile = parse_profile(&profile, &p)?;
            let text = run_simulate(&p, &profile, n, seed, output.format.unwrap_or(Format::Csv))?;
            Ok((EXIT_OK, text, output.out))
        }
    }
}

fn parse_profile(name: &str, p: &ModelParams) -> CliResult<StrategyProfile> {
    if name == "classifier" {
        return Ok(classify(p).profile);
    }
    if let Some(profile) = StrategyProfile::by_name(name) {
        return Ok(profile);
    }
    name.parse::<usize>()
        .ok()
        .and_then(StrategyProfile::from_index)
        .ok_or_else(|| usage(format!("unknown profile `{name}`")))
}

pub fn run_classify(p: &ModelParams, format: Format) -> String {
    let report = classify(p);
    match format {
        Format::Csv => {
            let metrics = theoretical_metrics(p, &report.profile);
            format!(
                "{}\n{}\n",
                regime_csv_header(Field::Phi),
                regime_csv_row(p.phi(), &report, &metrics)
            )
        }
        Format::Pretty => {
            let t = &report.thresholds;
            let mut s = String::new();
            s.push_str(&format!("regime: {}\n", report.regime));
            s.push_str(&format!("profile: {}\n", report.profile));
            s.push_str("binding conditions:\n");
            for note in &report.notes {
                s.push_str(&format!("  - {note}\n"));
            }
            s.push_str("thresholds:\n");
            for (name, v) in [
                ("phi_e", t.phi_e),
                ("phi_v", t.phi_v),
                ("phi_a", t.phi_a),
                ("phi_a_consistent", t.phi_a_consistent),
                ("u_lo", t.u_lo),
                ("u_hi", t.u_hi),
                ("u_hi2", t.u_hi2),
            ] {
                s.push_str(&format!("  {name:<17} {}\n", num(v)));
            }
            s
        }
    }
}

pub fn run_sweep(
    p: &ModelParams,
    field: Field,
    grid: &[f64],
    format: Format,
    stderr: &mut dyn Write,
) -> CliResult<String> {
    let result = sweep(p, field, grid).map_err(|e| usage(format!("invalid range: {e}")))?;
    for tr in &result.transitions {
        let _ = writeln!(
            stderr,
            "transition: {field} in ({}, {}]: {} -> {}",
            num(tr.previous_value),
            num(tr.value),
            tr.from,
            tr.to
        );
    }
    let rows: Vec<String> = result
        .points
        .iter()
        .map(|(v, report)| {
            let point = p.with(field, *v).expect("validated by sweep");
            regime_csv_row(*v, report, &theoretical_metrics(&point, &report.profile))
        })
        .collect();
    let header = regime_csv_header(field);
    Ok(match format {
        Format::Csv => {
            let mut s = header;
            s.push('\n');
            for row in rows {
                s.push_str(&row);
                s.push('\n');
            }
            s
        }
        Format::Pretty => {
            let table: Vec<Vec<String>> = std::iter::once(header)
                .chain(rows)
                .map(|r| r.split(',').map(str::to_string).collect())
                .collect();
            let widths: Vec<usize> = (0..table[0].len())
                .map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            let mut s = String::new();
            for row in table {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                s.push_str(cells.join("  ").trim_end());
                s.push('\n');
            }
            s
        }
    })
}

pub fn run_verify(p: &ModelParams, expect_classifier: bool) -> (i32, String) {
    let equilibria = find_equilibria(p);
    let report = classify(p);
    let mut s = format!(
        "equilibria ({} of {}):\n",
        equilibria.len(),
        StrategyProfile::COUNT
    );
    for profile in &equilibria {
        s.push_str(&format!("  {profile}\n"));
    }
    let check = is_pbe(p, &report.profile);
    s.push_str(&format!(
        "classifier: {} [{}] {}\n",
        report.regime,
        report.profile,
        if check.is_equilibrium {
            "is an equilibrium"
        } else {
            "is NOT an equilibrium"
        }
    ));
    for d in &check.voter_deviations {
        s.push_str(&format!(
            "  voter at {}: {:?} beats {:?} by {}\n",
            d.class,
            d.better,
            d.prescribed,
            num(d.gain)
        ));
    }
    if let Some(d) = check.incumbent_deviation {
        s.push_str(&format!(
            "  high type: {} gains {} (win probability change {})\n",
            if d.to_effort {
                "exerting effort"
            } else {
                "shirking"
            },
            num(d.net_gain),
            num(d.win_prob_gain)
        ));
    }
    let code = if expect_classifier && !check.is_equilibrium {
        EXIT_EXPECTATION
    } else {
        EXIT_OK
    };
    (code, s)
}

pub fn run_simulate(
    p: &ModelParams,
    profile: &StrategyProfile,
    n: u64,
    seed: u64,
    format: Format,
) -> CliResult<String> {
    let empirical = simulate(p, profile, n, seed).map_err(|e| usage(e.to_string()))?;
    let exact = theoretical_metrics(p, profile);
    Ok(match format {
        Format::Csv => format!(
            "{METRICS_CSV_HEADER}\n{}\n{}\n",
            metrics_csv_row("empirical", profile, &empirical),
            metrics_csv_row("theoretical", profile, &exact)
        ),
        Format::Pretty => {
            let mut s = format!("profile: {profile}\nreplications: {n} (seed {seed})\n");
            s.push_str("                    empirical     exact\n");
            for (name, a, b) in [
                (
                    "p_high_retained",
                    empirical.p_high_retained(),
                    exact.p_high_retained(),
                ),
                (
                    "p_low_retained",
                    empirical.p_low_retained(),
                    exact.p_low_retained(),
                ),
                (
                    "p_subversive_ret.",
                    empirical.p_subversive_retained(),
                    exact.p_subversive_retained(),
                ),
                (
                    "welfare",
                    empirical.expected_voter_welfare,
                    exact.expected_voter_welfare,
                ),
            ] {
                s.push_str(&format!("  {name:<17} {:<13} {}\n", num(a), num(b)));
            }
            s.push_str("posteriors (high / low / subversive):\n");
            for (class, post) in &empirical.empirical_posteriors {
                s.push_str(&format!(
                    "  {class:<12} {} / {} / {}\n",
                    num(post.p_high),
                    num(post.p_low),
                    num(post.p_subversive)
                ));
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let c =
            ConfigFile::parse("# canonical\nsigma = 0.05\nu_c=0.4 # challenger\n\n--phi = 0.3\n")
                .unwrap();
        assert_eq!(c.get::<f64>("sigma").unwrap(), Some(0.05));
        assert_eq!(c.get::<f64>("uc").unwrap(), Some(0.4));
        assert_eq!(c.get::<f64>("phi").unwrap(), Some(0.3));
        assert!(ConfigFile::parse("tau = 1").is_err());
        assert!(ConfigFile::parse("sigma 0.1").is_err());
        assert!(ConfigFile::parse("sigma = abc")
            .unwrap()
            .get::<f64>("sigma")
            .is_err());
    }

    #[test]
    fn profile_names() {
        let p = ModelParams::new(0.05, 0.5, 0.7, 0.1, 1.0, 0.4, 0.3).unwrap();
        assert_eq!(
            parse_profile("classifier", &p).unwrap(),
            StrategyProfile::accountability_listen()
        );
        assert_eq!(
            parse_profile("17", &p).unwrap(),
            StrategyProfile::accountability_listen()
        );
        assert!(parse_profile("32", &p).is_err());
        assert!(parse_profile("bogus", &p).is_err());
    }
}
