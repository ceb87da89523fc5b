//! The `vsym` command line: argument parsing, dispatch and JSON reports.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{pfaffian, AlternatingMatrix, Matrix};
use crate::orbit::{orbit_report, symbol_constancy_check, OrbitReport};
use crate::projmod::{Iso, LineModule, ModuleHom, ProjModule};
use crate::report::{
    form_json, iso_json, matrix_from_json, matrix_json, module_form_json, to_pretty, witness_from_json,
    witness_json, word_from_json, word_json,
};
use crate::ring::{Elem, Ring};
use crate::symbol::{
    action_compatibility_witness, action_move_witness, classical_vaserstein, free_crosscheck,
    section_independence_witness, section_move_witness, vaserstein_symbol, UnimodularEpi,
};
use crate::witt::search::SearchOptions;
use crate::witt::{lemma21_witness, verify_witness, ElementaryStep, ElementaryWord, Mode};
use crate::Verdict;

pub const DEPTH_ENV: &str = "VSYM_SEARCH_DEPTH";

#[derive(Parser, Debug)]
#[command(name = "vsym", version, about = "Exact Vaserstein symbols, witnesses and orbit checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The 4x4 matrix V(a, b) and its Pfaffian.
    SymbolClassical(ClassicalArgs),
    /// The symbol of a: P0 ⊕ R -> R as a pair of forms on P0 ⊕ R ⊕ R^∨.
    SymbolGeneral(GeneralArgs),
    /// Independence of the section: the section-change automorphism and its replayable witness.
    WitnessSection(SectionArgs),
    /// Compatibility with an automorphism φ of P0 ⊕ R.
    WitnessAction(ActionArgs),
    /// Replay a witness file.
    WitnessVerify(VerifyArgs),
    /// Witness for [P, f, φ^∨ f φ] = 0 with φ elementary.
    Lemma21(Lemma21Args),
    /// Unimodular rows over a finite ring and their E-orbits.
    OrbitEnum(OrbitArgs),
    /// Compare the symbol on a free P0 with the classical matrix.
    CrosscheckFree(CrosscheckArgs),
}

#[derive(Args, Debug)]
pub struct ClassicalArgs {
    #[arg(long)]
    pub ring: String,
    /// Comma-separated row of length 3.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Comma-separated row with a·b = 1; found by Bezout when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Args, Debug)]
pub struct GeneralArgs {
    #[arg(long)]
    pub ring: String,
    /// `free:N`, or an idempotent matrix as inline JSON or a JSON file.
    #[arg(long, default_value = "free:2")]
    pub p0: String,
    /// Comma-separated row `a = (a|P0, a|R)` on the ambient coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Section column; the Bezout section when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
}

#[derive(Args, Debug)]
pub struct SectionArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long, default_value = "free:2")]
    pub p0: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
}

#[derive(Args, Debug)]
pub struct ActionArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long, default_value = "free:2")]
    pub p0: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Automorphism of P0 ⊕ R, inline JSON or a JSON file.
    #[arg(long)]
    pub phi: Option<String>,
    /// Elementary word `{"summands", "word"}` over (P0, R); defines φ when `--phi` is absent.
    #[arg(long)]
    pub word: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Witness document or a report containing one.
    #[arg(long)]
    pub witness: PathBuf,
    /// Override the mode recorded in the file: V, V_SL or V_GL.
    #[arg(long)]
    pub mode: Option<String>,
}

#[derive(Args, Debug)]
pub struct Lemma21Args {
    #[arg(long)]
    pub ring: Option<String>,
    /// Free case: R^(2n) with the standard form and rank-1 summands.
    #[arg(long)]
    pub n: Option<usize>,
    /// 1-based summand indices of the generator id + r·e_ij.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub r: String,
    /// JSON `{"ring", "line", "form": {"module", "matrix", "inverse"}, "word": {"summands", "word"}}`.
    #[arg(long)]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long)]
    pub n: usize,
    /// Also link the symbols inside each orbit (n = 3 only).
    #[arg(long)]
    pub constancy: bool,
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CrosscheckArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long)]
    pub depth: Option<usize>,
}

/// A finished command: payload, verdict and exit code.
pub struct Outcome {
    pub request: Value,
    pub result: Value,
    pub verdict: Verdict,
    pub summary: String,
}

fn parse_row(ring: &Ring, text: &str) -> Result<Vec<Elem>> {
    text.split(',').map(|x| ring.parse_elem(x.trim())).collect()
}

fn load_json(arg: &str) -> Result<Value> {
    let t = arg.trim_start();
    let text = if t.starts_with('[') || t.starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    Ok(serde_json::from_str(&text)?)
}

fn parse_p0(ring: &Ring, arg: &str) -> Result<ProjModule> {
    if let Some(n) = arg.strip_prefix("free:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::SpecSyntax(format!("bad free rank {n:?}")))?;
        return Ok(ProjModule::free(ring, n));
    }
    ProjModule::new(matrix_from_json(ring, &load_json(arg)?)?)
}

fn row_json(ring: &Ring, row: &[Elem]) -> Value {
    json!(row.iter().map(|x| ring.format(x)).collect::<Vec<_>>())
}

/// Search depth from the flag, then the environment, then 8.
pub fn search_depth(flag: Option<usize>) -> Result<usize> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match std::env::var(DEPTH_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::SpecSyntax(format!("{DEPTH_ENV}={v:?} is not a number"))),
        Err(_) => Ok(8),
    }
}

fn search_opts(depth: Option<usize>) -> Result<SearchOptions> {
    Ok(SearchOptions {
        max_depth: search_depth(depth)?,
        ..SearchOptions::default()
    })
}

fn epi_from(ring: &Ring, p0: &str, a: &str) -> Result<UnimodularEpi> {
    let p0 = parse_p0(ring, p0)?;
    UnimodularEpi::from_elems(&p0, &parse_row(ring, a)?)
}

fn column(ring: &Ring, text: &str) -> Result<Matrix> {
    Ok(Matrix::column(ring, parse_row(ring, text)?))
}

pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::SymbolClassical(a) => symbol_classical(a),
        Command::SymbolGeneral(a) => symbol_general(a),
        Command::WitnessSection(a) => witness_section(a),
        Command::WitnessAction(a) => witness_action(a),
        Command::WitnessVerify(a) => witness_verify(a),
        Command::Lemma21(a) => lemma21(a),
        Command::OrbitEnum(a) => orbit_enum(a),
        Command::CrosscheckFree(a) => crosscheck(a),
    }
}

fn symbol_classical(args: &ClassicalArgs) -> Result<Outcome> {
    let r = Ring::parse(&args.ring)?;
    let a = parse_row(&r, &args.a)?;
    let b = match &args.b {
        Some(b) => parse_row(&r, b)?,
        None => r.bezout(&a).ok_or(Error::NotUnimodular)?,
    };
    let v = classical_vaserstein(&r, &a, &b)?;
    let pf = v.pfaffian()?;
    if !r.is_one(&pf) {
        return Err(Error::VerificationFailed(format!("Pfaffian is {}", r.format(&pf))));
    }
    Ok(Outcome {
        request: json!({"verb": "symbol-classical", "ring": args.ring, "a": args.a, "b": args.b}),
        result: json!({
            "ring": r.to_string(),
            "a": row_json(&r, &a),
            "b": row_json(&r, &b),
            "matrix": matrix_json(v.matrix()),
            "pfaffian": r.format(&pf),
        }),
        verdict: Verdict::Verified,
        summary: format!("V(a, b) over {r}: Pfaffian {}", r.format(&pf)),
    })
}

fn symbol_general(args: &GeneralArgs) -> Result<Outcome> {
    let r = Ring::parse(&args.ring)?;
    let epi = epi_from(&r, &args.p0, &args.a)?;
    let s = args.s.as_deref().map(|s| column(&r, s)).transpose()?;
    let sym = vaserstein_symbol(&epi, s.as_ref())?;
    let mut result = json!({
        "ring": r.to_string(),
        "p0": matrix_json(epi.p0().idempotent()),
        "a": matrix_json(epi.row()),
        "section": matrix_json(&sym.section),
        "kernel": matrix_json(sym.kernel.idempotent()),
        "line": matrix_json(sym.line.idempotent()),
        "chi0": form_json(&sym.chi0),
        "chi_a": form_json(&sym.chi_a),
        "i_s": iso_json(&sym.i_s),
        "module": matrix_json(sym.module.idempotent()),
        "g0": form_json(&sym.g0),
        "g1": form_json(&sym.g1),
    });
    if sym.line.ambient() == 1 && sym.module.is_free_presentation() {
        result["pfaffian_g0"] = json!(r.format(&pfaffian(sym.g0.matrix())?));
        result["pfaffian_g1"] = json!(r.format(&pfaffian(sym.g1.matrix())?));
    }
    Ok(Outcome {
        request: json!({"verb": "symbol-general", "ring": args.ring, "p0": args.p0, "a": args.a, "s": args.s}),
        result,
        verdict: Verdict::Verified,
        summary: format!("symbol on a module of ambient size {}", sym.module.ambient()),
    })
}

fn witness_section(args: &SectionArgs) -> Result<Outcome> {
    let r = Ring::parse(&args.ring)?;
    let epi = epi_from(&r, &args.p0, &args.a)?;
    let s = column(&r, &args.s)?;
    let t = column(&r, &args.t)?;
    let w = section_independence_witness(&epi, &s, &t)?;
    if !w.chi_a_equal {
        return Err(Error::VerificationFailed("χ_a depends on the section".into()));
    }
    let mw = section_move_witness(&w)?;
    verify_witness(&mw, Mode::V)?;
    Ok(Outcome {
        request: json!({"verb": "witness-section", "ring": args.ring, "p0": args.p0, "a": args.a, "s": args.s, "t": args.t}),
        result: json!({
            "ring": r.to_string(),
            "d_l": matrix_json(&w.d_l),
            "phi_l": iso_json(&w.phi_l),
            "word": word_json(&w.word),
            "g1_s": form_json(&w.with_s.g1),
            "g1_t": form_json(&w.with_t.g1),
            "chi_a_equal": w.chi_a_equal,
            "identity_verified": w.verified,
            "witness": witness_json(&r, Mode::V, &mw),
        }),
        verdict: Verdict::Verified,
        summary: format!("section change carries g1(s) to g1(t); witness has {} move(s)", mw.moves.len()),
    })
}

fn witness_action(args: &ActionArgs) -> Result<Outcome> {
    let r = Ring::parse(&args.ring)?;
    let epi = epi_from(&r, &args.p0, &args.a)?;
    let s = match &args.s {
        Some(s) => column(&r, s)?,
        None => crate::symbol::find_section(&epi)?,
    };
    let word = args
        .word
        .as_deref()
        .map(|w| load_json(w).and_then(|v| word_from_json(&r, &v)))
        .transpose()?;
    let phi = match (&args.phi, &word) {
        (Some(p), _) => {
            let m = matrix_from_json(&r, &load_json(p)?)?;
            Iso::automorphism(ModuleHom::new(epi.module(), epi.module(), m)?)?
        }
        (None, Some(w)) => w.product()?,
        (None, None) => return Err(Error::SpecSyntax("give --phi or --word".into())),
    };
    let act = action_compatibility_witness(&epi, &phi, &s, word.as_ref())?;
    let moved = action_move_witness(&epi, &phi, &s, word.as_ref())?;
    let mut result = json!({
        "ring": r.to_string(),
        "phi": iso_json(&phi),
        "det": r.format(&act.det),
        "class": act.class.as_str(),
        "moved_row": matrix_json(act.moved_epi.row()),
        "moved_section": matrix_json(&act.moved_section),
        "phi_bar": matrix_json(act.phi_bar.matrix()),
        "intertwines_iso": act.intertwines_iso,
        "intertwines_form": act.intertwines_form,
    });
    if let Some((w, mode)) = &moved {
        result["witness"] = witness_json(&r, *mode, w);
    }
    Ok(Outcome {
        request: json!({"verb": "witness-action", "ring": args.ring, "p0": args.p0, "a": args.a, "s": args.s, "phi": args.phi, "word": args.word}),
        result,
        verdict: Verdict::Verified,
        summary: format!("both intertwining identities hold (det φ = {})", r.format(&act.det)),
    })
}

fn witness_verify(args: &VerifyArgs) -> Result<Outcome> {
    let text = std::fs::read_to_string(&args.witness)?;
    let v: Value = serde_json::from_str(&text)?;
    let request = json!({"verb": "witness-verify", "witness": args.witness.display().to_string(), "mode": args.mode});
    let checked = witness_from_json(&v).and_then(|doc| {
        let mode = match &args.mode {
            Some(m) => Mode::parse(m)?,
            None => doc.mode,
        };
        verify_witness(&doc.witness, mode).map(|_| (doc, mode))
    });
    match checked {
        Ok((doc, mode)) => Ok(Outcome {
            request,
            result: json!({
                "ring": doc.ring.to_string(),
                "mode": mode.to_string(),
                "moves": doc.witness.moves.len(),
                "status": "valid",
            }),
            verdict: Verdict::Verified,
            summary: format!("witness replays in {mode} ({} moves)", doc.witness.moves.len()),
        }),
        Err(e @ (Error::WitnessInvalid { .. } | Error::ModeViolation { .. })) => {
            let (index, kind) = match &e {
                Error::WitnessInvalid { index, .. } => (*index, "WitnessInvalid"),
                Error::ModeViolation { index, .. } => (*index, "ModeViolation"),
                _ => unreachable!(),
            };
            Ok(Outcome {
                request,
                result: json!({"status": kind, "index": index, "reason": e.to_string()}),
                verdict: Verdict::Falsified,
                summary: format!("witness rejected: {e}"),
            })
        }
        Err(e) => Err(e),
    }
}

fn lemma21(args: &Lemma21Args) -> Result<Outcome> {
    let (ring, word, form) = if let Some(input) = &args.input {
        let v = load_json(input)?;
        let ring = match (&args.ring, v.get("ring").and_then(Value::as_str)) {
            (Some(r), _) => Ring::parse(r)?,
            (None, Some(r)) => Ring::parse(r)?,
            (None, None) => return Err(Error::SpecSyntax("no ring given".into())),
        };
        let line = match v.get("line") {
            Some(l) => LineModule::new(ProjModule::new(matrix_from_json(&ring, l)?)?)?,
            None => LineModule::trivial(&ring),
        };
        let word = word_from_json(&ring, v.get("word").ok_or_else(|| Error::Json("missing word".into()))?)?;
        let fv = v.get("form").ok_or_else(|| Error::Json("missing form".into()))?;
        let p = match fv.get("module") {
            Some(m) => ProjModule::new(matrix_from_json(&ring, m)?)?,
            None => word.module(),
        };
        let form = crate::report::form_from_json(&line, &p, fv)?;
        (ring, word, form)
    } else {
        let ring = Ring::parse(args.ring.as_deref().ok_or_else(|| Error::SpecSyntax("--ring is required".into()))?)?;
        let n = args.n.ok_or_else(|| Error::SpecSyntax("--n is required without --input".into()))?;
        let (i, j) = match (args.i, args.j) {
            (Some(i), Some(j)) if i >= 1 && j >= 1 => (i - 1, j - 1),
            _ => return Err(Error::SpecSyntax("--i and --j are 1-based and required".into())),
        };
        let size = 2 * n;
        if i == j || i >= size || j >= size {
            return Err(Error::BadIndices { n: size, i: i + 1, j: j + 1 });
        }
        let r = ring.parse_elem(&args.r)?;
        let word = ElementaryWord::new(
            (0..size).map(|_| ProjModule::free(&ring, 1)).collect(),
            vec![ElementaryStep::new(i, j, Matrix::column(&ring, vec![r]))],
        )?;
        let form = crate::projmod::OrientedAltIso::from_free(AlternatingMatrix::standard(&ring, n).matrix())?;
        (ring, word, form)
    };
    let w = lemma21_witness(&word, &form)?;
    verify_witness(&w, Mode::V)?;
    Ok(Outcome {
        request: json!({"verb": "lemma21", "ring": args.ring, "n": args.n, "i": args.i, "j": args.j, "r": args.r, "input": args.input}),
        result: json!({
            "ring": ring.to_string(),
            "form": module_form_json(&form),
            "word": word_json(&word),
            "witness": witness_json(&ring, Mode::V, &w),
        }),
        verdict: Verdict::Verified,
        summary: format!("[P, f, φ^∨ f φ] = 0 with {} moves", w.moves.len()),
    })
}

fn orbit_json(rep: &OrbitReport) -> Value {
    let r = &rep.ring;
    let orbits: Vec<Value> = rep
        .orbits
        .iter()
        .enumerate()
        .map(|(k, block)| {
            let mut o = json!({
                "representative": row_json(r, &rep.rows[block[0]]),
                "size": block.len(),
            });
            if let Some(c) = rep.symbol_constancy.as_ref().map(|c| &c[k]) {
                o["symbol_constancy"] = json!({
                    "verdict": c.verdict.as_str(),
                    "linked": c.linked,
                    "explored": c.explored,
                });
            }
            o
        })
        .collect();
    json!({
        "ring": r.to_string(),
        "n": rep.n,
        "um_count": rep.um_count(),
        "generator_set": rep.generator_set,
        "orbit_count": rep.orbit_count(),
        "orbits": orbits,
    })
}

fn orbit_table(rep: &OrbitReport) -> String {
    let r = &rep.ring;
    let mut s = format!(
        "{} n={}: {} unimodular rows, {} orbit(s) under {}\n",
        r,
        rep.n,
        rep.um_count(),
        rep.orbit_count(),
        rep.generator_set
    );
    s.push_str("orbit  size  representative  constancy\n");
    for (k, block) in rep.orbits.iter().enumerate() {
        let row: Vec<String> = rep.rows[block[0]].iter().map(|x| r.format(x)).collect();
        let c = rep
            .symbol_constancy
            .as_ref()
            .map(|c| format!("{} ({}/{})", c[k].verdict.as_str(), c[k].linked, c[k].size))
            .unwrap_or_else(|| "-".into());
        s.push_str(&format!("{:>5}  {:>4}  ({})  {}\n", k + 1, block.len(), row.join(","), c));
    }
    s
}

fn orbit_enum(args: &OrbitArgs) -> Result<Outcome> {
    let r = Ring::parse(&args.ring)?;
    let rep = if args.constancy {
        if args.n != 3 {
            return Err(Error::DimensionMismatch("symbol constancy needs n = 3".into()));
        }
        symbol_constancy_check(&r, &search_opts(args.depth)?)?
    } else {
        orbit_report(&r, args.n)?
    };
    let verdict = match &rep.symbol_constancy {
        Some(c) if c.iter().any(|o| o.verdict != Verdict::Verified) => Verdict::Inconclusive,
        _ => Verdict::Verified,
    };
    Ok(Outcome {
        request: json!({"verb": "orbit-enum", "ring": args.ring, "n": args.n, "constancy": args.constancy, "depth": args.depth}),
        result: orbit_json(&rep),
        verdict,
        summary: orbit_table(&rep),
    })
}

fn crosscheck(args: &CrosscheckArgs) -> Result<Outcome> {
    let r = Ring::parse(&args.ring)?;
    let a = parse_row(&r, &args.a)?;
    let b = args.b.as_deref().map(|b| parse_row(&r, b)).transpose()?;
    let c = free_crosscheck(&r, &a, b.as_deref(), &search_opts(args.depth)?)?;
    let mut result = json!({
        "ring": r.to_string(),
        "general": matrix_json(c.general.matrix()),
        "classical": matrix_json(c.classical.matrix()),
        "pfaffian_general": r.format(&c.pfaffian_general),
        "pfaffian_classical": r.format(&c.pfaffian_classical),
        "explored": c.explored,
    });
    if let Some(w) = &c.witness {
        result["witness"] = witness_json(&r, Mode::V, w);
    }
    Ok(Outcome {
        request: json!({"verb": "crosscheck-free", "ring": args.ring, "a": args.a, "b": args.b, "depth": args.depth}),
        result,
        verdict: c.verdict,
        summary: format!("free crosscheck: {} after {} states", c.verdict.as_str(), c.explored),
    })
}

/// Exit code for a library error: identities failing to verify are loud
/// falsifications, exhausted searches are inconclusive, the rest is bad input.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::VerificationFailed(_) => 1,
        Error::SearchExhausted { .. } => 2,
        _ => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::SpecSyntax(_) => "SpecSyntax",
        Error::UnsupportedRing(_) => "UnsupportedRing",
        Error::RingMismatch(..) => "RingMismatch",
        Error::DimensionMismatch(_) => "DimensionMismatch",
        Error::BadIndices { .. } => "BadIndices",
        Error::OddSize(_) => "OddSize",
        Error::NotAlternating(_) => "NotAlternating",
        Error::NotIdempotent => "NotIdempotent",
        Error::NotModuleMap => "NotModuleMap",
        Error::RankNot2 => "RankNot2",
        Error::RankNot1 => "RankNot1",
        Error::NotBezoutPair(_) => "NotBezoutPair",
        Error::NotUnimodular => "NotUnimodular",
        Error::NotSection => "NotSection",
        Error::NotInvertible(_) => "NotInvertible",
        Error::NotElementaryGenerator(_) => "NotElementaryGenerator",
        Error::VerificationFailed(_) => "VerificationFailed",
        Error::WitnessInvalid { .. } => "WitnessInvalid",
        Error::ModeViolation { .. } => "ModeViolation",
        Error::SearchExhausted { .. } => "SearchExhausted",
        Error::RingNotFinite(_) => "RingNotFinite",
        Error::Io(_) => "IoError",
        Error::Json(_) => "JsonError",
    }
}

/// The full report document; `timing_ms` is the only nondeterministic field.
pub fn report_value(o: &Outcome, elapsed_ms: u128) -> Value {
    json!({
        "request": o.request,
        "result": o.result,
        "verdict": o.verdict.as_str(),
        "timing_ms": elapsed_ms as u64,
        "tool": {"name": "vsym", "version": env!("CARGO_PKG_VERSION")},
    })
}

/// Run a parsed command line; returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let code = error_exit_code(&e);
            if code == 1 {
                eprintln!("FALSIFIED: {e}");
            } else {
                eprintln!("error ({}): {e}", error_kind(&e));
            }
            return code;
        }
    };
    let doc = report_value(&outcome, start.elapsed().as_millis());
    let text = to_pretty(&doc);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error (IoError): cannot write {}: {e}", path.display());
                return 3;
            }
            println!("{}", outcome.summary.trim_end());
        }
        None => print!("{text}"),
    }
    if outcome.verdict == Verdict::Falsified {
        eprintln!("FALSIFIED: {}", outcome.summary);
    }
    outcome.verdict.exit_code()
}
