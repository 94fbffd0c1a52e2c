//! `coxeter`: command-line front end for the reflection-group crates.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad input data,
//! exceeded caps, failed verification), 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use coxeter_core::{condition_f_scan, group_order, normal_form, Ball, Caps, ConditionF};
use coxeter_core::{CoxeterMatrix, Word};
use recognizer::{certify_coxeter, close_group, Certification, Permutation};
use serde_json::{json, Value};
use spaces::{
    chamber_membership, check_chamber_sides, check_chamber_stabilizer, check_length_side,
    check_side_trichotomy, check_wall_separation, descend, gallery_distance, properness_count,
    render_json, render_svg, tile, wall_neighborhood_witness, CayleyModel, LineModel, Membership,
    PlaneTriangleModel, Scalar, ScanReport, SpaceModel, TriangleKind,
};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "coxeter", version, about = "Exact computations with reflection groups")]
struct Cli {
    /// Cap on enumerated group elements.
    #[arg(long, global = true, default_value_t = 100_000)]
    cap_elements: usize,
    /// Cap on the word sets built during reduction.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap_closure: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word to its canonical normal form.
    Nf { matrix: PathBuf, word: String },
    /// Minimum length of the element spelled by a word.
    Length { matrix: PathBuf, word: String },
    /// Enumerate the group ball of a given radius.
    Ball { matrix: PathBuf, radius: usize },
    /// Group order, when it fits under the element cap.
    Order { matrix: PathBuf },
    /// Scan the folding condition over a finite group.
    CheckF { matrix: PathBuf },
    /// Walk a point into the base chamber.
    Descend { model: String, point: String },
    /// Render the chamber tiling of a triangle model (SVG, or exact
    /// JSON with --format json).
    Tile { kind: String, radius: usize },
    /// Run a verification scan on a model.
    Verify {
        model: String,
        #[arg(long, value_enum)]
        check: Check,
        /// Group-ball radius for the scan.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Displacement bound for the properness count.
        #[arg(long, default_value = "2")]
        bound: String,
        /// Sample-point count for the sampled scans.
        #[arg(long, default_value_t = 24)]
        samples: usize,
    },
    /// Decide whether involutive permutation generators form a
    /// Coxeter system.
    Recognize { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Side-test trichotomy on sampled points.
    Trichotomy,
    /// Chamber membership vs. wall sides.
    Chamber,
    /// Per-generator wall-neighborhood witnesses.
    WallWitness,
    /// Only a generator's own wall swallows its reflected chamber.
    Separation,
    /// Word length vs. chamber side correspondence.
    LengthSide,
    /// Finiteness of small-displacement element counts.
    Proper,
    /// Trivial chamber stabilizer.
    Stabilizer,
}

/// A command's result in both renderings.
struct Output {
    text: String,
    json: Value,
    /// Raw payload (SVG or preformatted JSON) that bypasses the
    /// format switch.
    raw: Option<String>,
    failed_verification: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, raw: None, failed_verification: false }
    }
}

#[derive(Debug)]
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            let rendered = match (&output.raw, cli.format) {
                (Some(raw), _) => raw.clone(),
                (None, Format::Text) => output.text.clone(),
                (None, Format::Json) => {
                    let mut s =
                        serde_json::to_string_pretty(&output.json).expect("serializable output");
                    s.push('\n');
                    s
                }
            };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{rendered}"),
            }
            if output.failed_verification {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn caps_of(cli: &Cli) -> Caps {
    Caps {
        closure_cap: cli.cap_closure,
        ball_cap: cli.cap_elements,
        ..Caps::default()
    }
}

fn load_matrix(path: &PathBuf) -> CliResult<CoxeterMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    Ok(CoxeterMatrix::parse(&text)?)
}

enum AnyModel {
    Line(LineModel),
    Tri(PlaneTriangleModel),
    Cayley(CayleyModel),
}

/// Model specs: `line`, a triangle type (`244`, `333`, `236`), or
/// `cayley:<matrix file>`.
fn load_model(spec: &str, caps: &Caps) -> CliResult<AnyModel> {
    if spec == "line" {
        return Ok(AnyModel::Line(LineModel::new()));
    }
    if let Some(kind) = TriangleKind::parse(spec) {
        return Ok(AnyModel::Tri(PlaneTriangleModel::new(kind)));
    }
    if let Some(path) = spec.strip_prefix("cayley:") {
        let matrix = load_matrix(&PathBuf::from(path))?;
        return Ok(AnyModel::Cayley(CayleyModel::with_caps(matrix, caps.clone())));
    }
    Err(CliError(format!(
        "unknown model {spec:?} (expected line, 244, 333, 236, or cayley:<matrix file>)"
    )))
}

/// Per-model CLI point syntax.
trait CliModel: SpaceModel {
    fn read_point(&self, text: &str) -> CliResult<Self::Point>;
}

impl CliModel for LineModel {
    fn read_point(&self, text: &str) -> CliResult<Self::Point> {
        spaces::Rational::from_str(text.trim())
            .map_err(|_| CliError(format!("bad line point {text:?} (expected p/q)")))
    }
}

impl CliModel for PlaneTriangleModel {
    fn read_point(&self, text: &str) -> CliResult<Self::Point> {
        let (x, y) = text
            .split_once(',')
            .ok_or_else(|| CliError(format!("bad plane point {text:?} (expected x , y)")))?;
        let parse = |part: &str| -> CliResult<Scalar> {
            part.trim()
                .parse()
                .map_err(|_| CliError(format!("bad coordinate {part:?}")))
        };
        Ok(spaces::Point2::new(parse(x)?, parse(y)?))
    }
}

impl CliModel for CayleyModel {
    fn read_point(&self, text: &str) -> CliResult<Self::Point> {
        Ok(self.parse_point(text)?)
    }
}

macro_rules! on_model {
    ($any:expr, |$m:ident| $body:expr) => {
        match $any {
            AnyModel::Line($m) => $body,
            AnyModel::Tri($m) => $body,
            AnyModel::Cayley($m) => $body,
        }
    };
}

fn run(cli: &Cli) -> CliResult<Output> {
    let caps = caps_of(cli);
    match &cli.command {
        Command::Nf { matrix, word } => {
            let m = load_matrix(matrix)?;
            let w = Word::parse(&m, word)?;
            let g = normal_form(&m, &w, &caps)?;
            let text = g.to_text(&m);
            Ok(Output::new(
                format!("normal form: {text}\nlength: {}\n", g.length()),
                json!({ "input": word, "normal_form": text, "length": g.length() }),
            ))
        }
        Command::Length { matrix, word } => {
            let m = load_matrix(matrix)?;
            let w = Word::parse(&m, word)?;
            let g = normal_form(&m, &w, &caps)?;
            Ok(Output::new(
                format!("length: {}\n", g.length()),
                json!({ "input": word, "length": g.length() }),
            ))
        }
        Command::Ball { matrix, radius } => {
            let m = load_matrix(matrix)?;
            let ball = Ball::enumerate(&m, *radius, &caps)?;
            let words: Vec<String> = ball.elements().iter().map(|g| g.to_text(&m)).collect();
            let mut text = String::new();
            text.push_str(&format!(
                "radius: {radius}\nlayer sizes: {:?}\ntotal: {}\n",
                ball.layer_sizes(),
                ball.len()
            ));
            for w in &words {
                text.push_str(w);
                text.push('\n');
            }
            Ok(Output::new(
                text,
                json!({
                    "radius": radius,
                    "layer_sizes": ball.layer_sizes(),
                    "total": ball.len(),
                    "elements": words,
                }),
            ))
        }
        Command::Order { matrix } => {
            let m = load_matrix(matrix)?;
            match group_order(&m, caps.ball_cap, &caps)? {
                Some(order) => Ok(Output::new(
                    format!("order: {order}\n"),
                    json!({ "order": order }),
                )),
                None => Ok(Output::new(
                    format!("order: exceeds cap {}\n", caps.ball_cap),
                    json!({ "order": null, "cap": caps.ball_cap }),
                )),
            }
        }
        Command::CheckF { matrix } => {
            let m = load_matrix(matrix)?;
            let ball = Ball::enumerate_group(&m, caps.ball_cap, &caps).map_err(|_| {
                CliError(format!(
                    "group exceeds the element cap {}; the scan needs a finite group",
                    caps.ball_cap
                ))
            })?;
            match condition_f_scan(&m, ball.elements(), &caps)? {
                ConditionF::Pass => Ok(Output::new(
                    format!("folding condition: pass ({} elements)\n", ball.len()),
                    json!({ "outcome": "pass", "order": ball.len() }),
                )),
                ConditionF::Counterexample { gamma, s, t } => {
                    let mut out = Output::new(
                        format!(
                            "folding condition: counterexample gamma = {}, s = {}, t = {}\n",
                            gamma.to_text(&m),
                            m.name(s.into()),
                            m.name(t.into())
                        ),
                        json!({
                            "outcome": "counterexample",
                            "gamma": gamma.to_text(&m),
                            "s": m.name(s.into()),
                            "t": m.name(t.into()),
                        }),
                    );
                    out.failed_verification = true;
                    Ok(out)
                }
            }
        }
        Command::Descend { model, point } => {
            let any = load_model(model, &caps)?;
            on_model!(&any, |m| run_descend(m, model, point, &caps))
        }
        Command::Tile { kind, radius } => {
            let kind = TriangleKind::parse(kind)
                .ok_or_else(|| CliError(format!("unknown triangle type {kind:?}")))?;
            let model = PlaneTriangleModel::new(kind);
            let chambers = tile(&model, *radius, &caps)?;
            let raw = match cli.format {
                Format::Json => render_json(&model, &chambers),
                Format::Text => render_svg(&model, &chambers),
            };
            Ok(Output {
                text: String::new(),
                json: Value::Null,
                raw: Some(raw),
                failed_verification: false,
            })
        }
        Command::Verify { model, check, radius, bound, samples } => {
            let any = load_model(model, &caps)?;
            on_model!(&any, |m| run_verify(m, model, *check, *radius, bound, *samples, &caps))
        }
        Command::Recognize { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError(format!("cannot read {}: {e}", file.display())))?;
            let perms = Permutation::parse_file(&text)?;
            let group = close_group(&perms, caps.ball_cap)?;
            match certify_coxeter(&group, caps.ball_cap, &caps)? {
                Certification::Certified { matrix, order } => Ok(Output::new(
                    format!("verdict: certified\norder: {order}\n{matrix}"),
                    json!({
                        "verdict": "certified",
                        "order": order,
                        "matrix": matrix.to_string(),
                    }),
                )),
                Certification::NotCoxeter { counterexample } => {
                    let gamma: Vec<String> =
                        counterexample.gamma_word.iter().map(|s| format!("s{s}")).collect();
                    let mut out = Output::new(
                        format!(
                            "verdict: not a Coxeter system\ncounterexample: gamma = {}, \
                             s = s{}, t = s{}\n",
                            if gamma.is_empty() { "e".into() } else { gamma.join(" ") },
                            counterexample.s,
                            counterexample.t
                        ),
                        json!({
                            "verdict": "not-coxeter",
                            "gamma": counterexample.gamma_word,
                            "s": counterexample.s,
                            "t": counterexample.t,
                        }),
                    );
                    out.failed_verification = true;
                    Ok(out)
                }
                Certification::Inconclusive { cap } => Err(CliError(format!(
                    "inconclusive: the recovered presentation outgrew the cap {cap}"
                ))),
            }
        }
    }
}

fn run_descend<M: CliModel>(
    model: &M,
    spec: &str,
    point: &str,
    caps: &Caps,
) -> CliResult<Output> {
    let p = model.read_point(point)?;
    let d = descend(model, &p, caps)?;
    // All separating walls of a point at descent depth n have length
    // at most 2n - 1; radius 2n + 1 is comfortably sufficient.
    let walls = gallery_distance(model, &p, 2 * d.steps + 1, caps)?;
    let word = d.gamma.to_text(model.matrix());
    let image = d.q.to_string();
    let text = format!(
        "word: {word}\nimage: {image}\nsteps: {}\nseparating walls: {walls}\n",
        d.steps
    );
    Ok(Output::new(
        text,
        json!({
            "model": spec,
            "point": point,
            "word": word,
            "image": image,
            "steps": d.steps,
            "separating_walls": walls,
        }),
    ))
}

fn report_output(spec: &str, check: &str, radius: usize, report: &ScanReport) -> Output {
    let mut text = format!(
        "check: {check}\nmodel: {spec}\nradius: {radius}\nchecks: {}\nviolations: {}\n",
        report.checks,
        report.violations.len()
    );
    for v in &report.violations {
        text.push_str("  ");
        text.push_str(v);
        text.push('\n');
    }
    let mut out = Output::new(
        text,
        json!({
            "model": spec,
            "check": check,
            "radius": radius,
            "checks": report.checks,
            "violations": report.violations,
        }),
    );
    out.failed_verification = !report.passed();
    out
}

fn run_verify<M: CliModel>(
    model: &M,
    spec: &str,
    check: Check,
    radius: usize,
    bound: &str,
    samples: usize,
    caps: &Caps,
) -> CliResult<Output> {
    match check {
        Check::Trichotomy => {
            let r = check_side_trichotomy(model, radius, samples, caps)?;
            Ok(report_output(spec, "trichotomy", radius, &r))
        }
        Check::Chamber => {
            let r = check_chamber_sides(model, radius, samples, caps)?;
            Ok(report_output(spec, "chamber", radius, &r))
        }
        Check::Separation => {
            let r = check_wall_separation(model, radius, caps)?;
            Ok(report_output(spec, "separation", radius, &r))
        }
        Check::LengthSide => {
            let r = check_length_side(model, radius, caps)?;
            Ok(report_output(spec, "length-side", radius, &r))
        }
        Check::Stabilizer => {
            let r = check_chamber_stabilizer(model, radius, caps)?;
            Ok(report_output(spec, "stabilizer", radius, &r))
        }
        Check::Proper => {
            let bound: Scalar = bound
                .parse()
                .map_err(|_| CliError(format!("bad bound {bound:?}")))?;
            if !bound.is_positive() {
                return Err(CliError("bound must be positive".into()));
            }
            let count = properness_count(model, &model.base_point(), &bound, radius, caps)?;
            Ok(Output::new(
                format!(
                    "check: proper\nmodel: {spec}\nradius: {radius}\nbound: {bound}\n\
                     elements within bound: {count}\n"
                ),
                json!({
                    "model": spec,
                    "check": "proper",
                    "radius": radius,
                    "bound": bound.to_string(),
                    "count": count,
                }),
            ))
        }
        Check::WallWitness => {
            let mut text = format!("check: wall-witness\nmodel: {spec}\nradius: {radius}\n");
            let mut rows = Vec::new();
            for s in 0..model.matrix().rank() {
                let w = wall_neighborhood_witness(model, s, radius, caps)?;
                debug_assert_eq!(chamber_membership(model, &w.point), Membership::Interior);
                text.push_str(&format!(
                    "{}: point = {}, epsilon = {}/{}, own wall gap^2 = {}, \
                     next wall gap^2 = {}\n",
                    model.matrix().name(s),
                    w.point,
                    w.epsilon.numer(),
                    w.epsilon.denom(),
                    w.wall_gap_sq,
                    w.other_gap_sq
                ));
                rows.push(json!({
                    "generator": model.matrix().name(s),
                    "point": w.point.to_string(),
                    "foot": w.foot.to_string(),
                    "epsilon": format!("{}/{}", w.epsilon.numer(), w.epsilon.denom()),
                    "wall_gap_sq": w.wall_gap_sq.to_string(),
                    "other_gap_sq": w.other_gap_sq.to_string(),
                }));
            }
            Ok(Output::new(
                text,
                json!({
                    "model": spec,
                    "check": "wall-witness",
                    "radius": radius,
                    "witnesses": rows,
                }),
            ))
        }
    }
}
