use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use jumplat::io::{parse_graph, GraphFile};
use jumplat::rational::{self, int, Rational};
use jumplat::{seifert, spectrum, splice};
use jumplat::{Error, ErrorClass, H0Policy, JumpInput, JumpSpectrum};

#[derive(Parser)]
#[command(
    name = "jumplat",
    version,
    about = "Jumping numbers and spectra of resolution graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write JSON instead of text; with a path, write it there and keep text on stdout.
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH")]
    json: Option<Option<PathBuf>>,
}

#[derive(Subcommand)]
enum Command {
    /// Anticanonical cycle Z_K.
    Zk { file: PathBuf },
    /// Dual cycle E*_v.
    Dual {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Log-canonical threshold.
    Lct(Source),
    /// Multiplicities m(c) for c >= 0.
    Jump {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        range: RangeArg,
        #[command(flatten)]
        analytic: Analytic,
    },
    /// Jump spectrum of the splice-quotient structure.
    Splice {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        range: RangeArg,
    },
    /// Topological spectrum on [0, 1) with beta_v = {-k_v}.
    Tsp(Source),
    /// Hodge spectrum on [0, 1] of the function with divisor F.
    Hodge {
        #[command(flatten)]
        source: Source,
        /// Extend to [0, 2) by symmetry.
        #[arg(long)]
        extend: bool,
    },
    /// Monodromy zeta function in factored form.
    Zeta(Source),
    /// Seifert invariants, Poincare series and spectrum of a star-shaped graph.
    Seifert {
        file: PathBuf,
        /// Last degree of the Poincare series.
        #[arg(long)]
        lmax: Option<usize>,
    },
    /// Sums of m(c) over (0, 1] and over c <= 0.
    Sums {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        analytic: Analytic,
    },
    /// Canonical form of a graph file.
    Print { file: PathBuf },
}

#[derive(Args)]
struct Source {
    file: PathBuf,
    /// Named cycle from the file.
    #[arg(
        long,
        conflicts_with = "from_arrows",
        required_unless_present = "from_arrows"
    )]
    cycle: Option<String>,
    /// F := sum of E* over the declared arrows, cleared to integrality.
    #[arg(long)]
    from_arrows: bool,
}

#[derive(Args)]
struct RangeArg {
    /// `<lo> <hi>` or `auto` for [lct, lct + 3].
    #[arg(long, num_args = 1..=2, default_value = "auto", value_name = "LO HI|auto", allow_hyphen_values = true)]
    range: Vec<String>,
}

#[derive(Args)]
struct Analytic {
    /// Geometric genus, or `splice` to use the splice-quotient value.
    #[arg(long)]
    pg: Option<String>,
    #[arg(long, value_enum, default_value_t = H0Arg::Auto)]
    h0: H0Arg,
}

#[derive(Clone, Copy, ValueEnum)]
enum H0Arg {
    Auto,
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
}

struct Report {
    text: String,
    json: Value,
}

/// A jump input together with the factor `r` relating its exponents to the
/// cycle the user named: `c_user = r * c_input`.
struct Loaded {
    input: JumpInput,
    scale: Rational,
}

impl Loaded {
    fn to_user(&self, sp: &JumpSpectrum) -> JumpSpectrum {
        sp.scale_exponents(&self.scale)
    }

    fn to_input(&self, c: &Rational) -> Rational {
        c / &self.scale
    }
}

fn read(file: &PathBuf) -> Result<GraphFile, Error> {
    let text = fs::read_to_string(file)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", file.display())))?;
    parse_graph(&text)
}

fn load(src: &Source) -> Result<Loaded, Error> {
    let file = read(&src.file)?;
    let (input, r) = file.jump_input(src.cycle.as_deref())?;
    if r != BigInt::from(1) {
        eprintln!("note: F cleared to integrality by r = {r}; exponents are reported for the original cycle");
    }
    Ok(Loaded {
        input,
        scale: Rational::from_integer(r),
    })
}

fn require_integral(l: &Loaded, what: &str) -> Result<(), Error> {
    if l.scale != int(1) {
        return Err(Error::Precondition(format!(
            "{what} needs an integral cycle; this one clears only after scaling by {}",
            l.scale
        )));
    }
    Ok(())
}

/// The requested range in the user's exponents.
fn range(arg: &RangeArg, l: &Loaded) -> Result<(Rational, Rational), Error> {
    let parse = |s: &str| {
        rational::parse(s).map_err(|m| Error::Precondition(format!("bad range bound `{s}`: {m}")))
    };
    match arg.range.as_slice() {
        [auto] if auto == "auto" => {
            let lct = &l.input.lct().0 * &l.scale;
            let hi = &lct + int(3);
            Ok((lct, hi))
        }
        [lo, hi] => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(Error::Precondition("range is empty".into()));
            }
            Ok((lo, hi))
        }
        _ => Err(Error::Precondition(
            "--range takes `<lo> <hi>` or `auto`".into(),
        )),
    }
}

fn apply_analytic(input: JumpInput, a: &Analytic) -> Result<JumpInput, Error> {
    let policy = match a.h0 {
        H0Arg::Auto => H0Policy::Auto,
        H0Arg::Zero => H0Policy::Value(0),
        H0Arg::One => H0Policy::Value(1),
    };
    let pg = match a.pg.as_deref() {
        None => None,
        Some("splice") => {
            let pg = splice::pg_splice(input.graph())?;
            Some(
                u64::try_from(pg)
                    .map_err(|_| Error::Precondition(format!("splice p_g = {pg} < 0")))?,
            )
        }
        Some(s) => Some(s.parse::<u64>().map_err(|_| {
            Error::Precondition(format!(
                "--pg expects a nonnegative integer or `splice`, got `{s}`"
            ))
        })?),
    };
    Ok(input.with_h0(policy)?.with_pg(pg))
}

fn spectrum_report(sp: &JumpSpectrum) -> Report {
    Report {
        text: sp.to_lines().join("\n"),
        json: serde_json::to_value(sp).expect("spectra serialize"),
    }
}

fn cycle_report(file: &GraphFile, l: &jumplat::QCycle) -> Report {
    let g = &file.graph;
    let map: Map<String, Value> = g
        .vertices()
        .iter()
        .zip(l.coeffs())
        .map(|(v, x)| (v.id.clone(), Value::String(rational::render(x))))
        .collect();
    Report {
        text: g.render_cycle(l),
        json: Value::Object(map),
    }
}

fn jump(l: &Loaded, lo: &Rational, hi: &Rational) -> Result<JumpSpectrum, Error> {
    let zero = Rational::from_integer(0.into());
    if lo < &zero {
        eprintln!("note: c < 0 omitted; those multiplicities depend on the analytic structure (see `splice`)");
    }
    let lo = if lo < &zero { zero } else { lo.clone() };
    let mut out = JumpSpectrum::new();
    for c in l.input.candidates(&l.to_input(&lo), &l.to_input(hi)) {
        out.add_term(c.clone(), l.input.mult(&c)?);
    }
    Ok(l.to_user(&out))
}

fn run(cmd: &Command) -> Result<Report, Error> {
    match cmd {
        Command::Zk { file } => {
            let f = read(file)?;
            let zk = f.graph.canonical_cycle().clone();
            Ok(cycle_report(&f, &zk))
        }
        Command::Dual { file, vertex } => {
            let f = read(file)?;
            let e = f.graph.dual_cycle_by_id(vertex)?;
            Ok(cycle_report(&f, &e))
        }
        Command::Lct(src) => {
            let l = load(src)?;
            let (c, m) = l.input.lct();
            let c = &c * &l.scale;
            Ok(Report {
                text: format!("lct = {} (m = {m})", rational::render(&c)),
                json: json!({ "lct": rational::render(&c), "m": m }),
            })
        }
        Command::Jump {
            source,
            range: r,
            analytic,
        } => {
            let mut l = load(source)?;
            l.input = apply_analytic(l.input, analytic)?;
            let (lo, hi) = range(r, &l)?;
            Ok(spectrum_report(&jump(&l, &lo, &hi)?))
        }
        Command::Splice { source, range: r } => {
            let l = load(source)?;
            let (lo, hi) = range(r, &l)?;
            let sp = splice::splice_spectrum(&l.input, &l.to_input(&hi))?;
            let lo_in = l.to_input(&lo);
            Ok(spectrum_report(&l.to_user(&sp.filter(|c| c >= &lo_in))))
        }
        Command::Tsp(src) => {
            let l = load(src)?;
            let sp = spectrum::tsp_from_zk(l.input.graph(), l.input.f())?;
            Ok(spectrum_report(&l.to_user(&sp)))
        }
        Command::Hodge { source, extend } => {
            let l = load(source)?;
            require_integral(&l, "the Hodge spectrum")?;
            let cg = spectrum::complete_graph(l.input.graph(), l.input.f())?;
            let mut sp = spectrum::hodge_spectrum_01(&cg);
            if *extend {
                sp = spectrum::extend_by_symmetry(&sp)?;
            }
            Ok(spectrum_report(&sp))
        }
        Command::Zeta(src) => {
            let l = load(src)?;
            require_integral(&l, "the zeta function")?;
            let cg = spectrum::complete_graph(l.input.graph(), l.input.f())?;
            let z = spectrum::acampo_zeta(&cg);
            let mut lines: Vec<String> = z
                .factors
                .iter()
                .map(|(m, e)| format!("(1 - t^{m})^{e}"))
                .collect();
            lines.push(format!("degree {}", z.degree()));
            lines.push(format!("dim H0_1 {}", z.h0_eigen_one));
            lines.push(format!("dim H1_1 {}", z.h1_eigen_one));
            Ok(Report {
                text: lines.join("\n"),
                json: json!({
                    "factors": z.factors.iter().map(|(m, e)| json!({ "m": m, "exponent": e })).collect::<Vec<_>>(),
                    "degree": z.degree(),
                    "h0_eigen_one": z.h0_eigen_one,
                    "h1_eigen_one": z.h1_eigen_one,
                }),
            })
        }
        Command::Seifert { file, lmax } => {
            let f = read(file)?;
            let (_, star) = seifert::central_input(&f.graph)?;
            let sd = &star.data;
            let default = rational::floor_i64(&(int(sd.alpha()) + sd.r())).max(0) as usize + 1;
            let p = seifert::dpd_series(sd, lmax.unwrap_or(default))?;
            let wh = seifert::wh_jump_spectrum(&p, sd);
            let r = |x: &Rational| rational::render(x);
            let legs: Vec<String> = sd.legs.iter().map(|(a, w)| format!("({a},{w})")).collect();
            let mut lines = vec![
                format!("center {}", f.graph.vertex(star.center).id),
                format!("b0 {} g {} legs {}", sd.b0, sd.g, legs.join(" ")),
                format!("e {}", r(&sd.e())),
                format!("chi {}", r(&sd.chi_orb())),
                format!("r {}", r(&sd.r())),
                format!("|H| {}", sd.h_order()),
                format!("alpha {}", sd.alpha()),
                format!("o {}", sd.o()),
                format!(
                    "poincare {}",
                    p.coeffs()
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
                format!("exact up to c = {}", r(&wh.c_max)),
            ];
            lines.extend(wh.spectrum.to_lines());
            Ok(Report {
                text: lines.join("\n"),
                json: json!({
                    "center": f.graph.vertex(star.center).id,
                    "data": sd,
                    "e": r(&sd.e()),
                    "chi": r(&sd.chi_orb()),
                    "r": r(&sd.r()),
                    "h_order": sd.h_order(),
                    "alpha": sd.alpha(),
                    "o": sd.o(),
                    "poincare": p.coeffs(),
                    "c_max": r(&wh.c_max),
                    "spectrum": wh.spectrum,
                }),
            })
        }
        Command::Sums { source, analytic } => {
            let l = load(source)?;
            let input = apply_analytic(l.input, analytic)?;
            let s01 = rational::render(&input.sum_01());
            let s0 = rational::render(&input.sum_nonpos()?);
            Ok(Report {
                text: format!("sum (0,1] {s01}\nsum c<=0 {s0}"),
                json: json!({ "sum_01": s01, "sum_nonpos": s0 }),
            })
        }
        Command::Print { file } => {
            let f = read(file)?;
            let text = f.print();
            Ok(Report {
                json: json!({ "text": text }),
                text: text.trim_end().to_string(),
            })
        }
    }
}

/// Like `println!`, but a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

/// `--range` accepts values like `-1/4`, so it also accepts anything that looks
/// like a flag. Bind a lone `auto` with `=` so it cannot swallow the next flag.
fn normalize_args(args: impl Iterator<Item = String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut args = args.peekable();
    while let Some(a) = args.next() {
        if a == "--range" && args.peek().map(String::as_str) == Some("auto") {
            args.next();
            out.push("--range=auto".into());
        } else {
            out.push(a);
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalize_args(std::env::args()));
    match run(&cli.command) {
        Ok(report) => {
            let pretty = serde_json::to_string_pretty(&report.json).expect("json values serialize");
            match &cli.json {
                None => emit(&report.text),
                Some(None) => emit(&pretty),
                Some(Some(path)) => {
                    if let Err(e) = fs::write(path, pretty + "\n") {
                        eprintln!("error[io]: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                    emit(&report.text);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (class, code) = match e.class() {
                ErrorClass::Parse => ("parse", 2),
                ErrorClass::Precondition => ("precondition", 3),
                ErrorClass::NeedsInput => ("needs-input", 4),
            };
            eprintln!("error[{class}]: {e}");
            ExitCode::from(code)
        }
    }
}
