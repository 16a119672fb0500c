//! Command-line front end: parse a morphism, run the analyses, print
//! human-readable text or the documented JSON shapes.

mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use subrec_core::{
    eigen_check, find_periodic_points, left_special_sequences, morphism_profile,
    one_sided_verdict, tower_partition, two_sided_verdict, two_sided_verdict_aperiodic,
    weak_one_sided_check, witness_search, Error, FactorLanguage, Morphism, RecStatus, SequenceGen,
    Side, SpecialSeqConfig, Witness, WitnessConfig,
};

#[derive(Parser)]
#[command(
    name = "subrec",
    version,
    about = "Analyze substitution shifts: factor languages, recognizability, towers, eigenvalues"
)]
struct Cli {
    /// Morphism rules like "a:ab,b:a", or @path to a rules file.
    #[arg(short, long, global = true)]
    morphism: Option<String>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Certification depth for witnesses and membership checks.
    #[arg(long, global = true, default_value_t = 1024)]
    depth: usize,

    /// How many shifted and prefixed variants of each fixed point seed the
    /// candidate pools.
    #[arg(long, global = true, default_value_t = 8)]
    seed_depth: usize,

    /// Exit with status 1 when a verdict stays unknown.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural profile, complexity, and periodic points.
    Analyze,
    /// Recognizability verdict.
    Rec {
        #[arg(long, value_enum, default_value_t = ModeArg::TwoSided)]
        mode: ModeArg,
        /// Largest reading scope tried before giving up.
        #[arg(long, default_value_t = 16)]
        max_scope: usize,
    },
    /// Search for certified non-recognizability witnesses.
    Witness {
        /// Longest heads u, u' tried.
        #[arg(long, default_value_t = 3)]
        max_u: usize,
        /// Largest power of the morphism whose fixed points seed tails.
        #[arg(long, default_value_t = 4)]
        k_max: u32,
    },
    /// Factor language levels and complexity.
    Language {
        #[arg(short, default_value_t = 12)]
        n: usize,
    },
    /// Special factors by length, plus left-special sequences.
    Special {
        #[arg(short, default_value_t = 8)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Periodic points of the shift.
    Periodic {
        #[arg(long, default_value_t = 8)]
        max_period: usize,
    },
    /// Tower partition cells at a reading scope.
    Tower {
        /// Reading scope; defaults to the smallest scope that works.
        #[arg(long)]
        scope: Option<usize>,
    },
    /// Rational eigenvalue check for constant-length morphisms.
    Eigen {
        /// Harmonic j of the candidate eigenvalue e^(2 pi i j / h).
        #[arg(long, default_value_t = 1)]
        j: usize,
        /// Number of sampled positions.
        #[arg(long, default_value_t = 4096)]
        len: usize,
    },
    /// Run the built-in example gallery and verify the expected verdicts.
    Gallery,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    OneSided,
    TwoSided,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn main() -> ExitCode {
    // Die quietly when the reader of a pipe goes away instead of
    // panicking in println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze => cmd_analyze(cli),
        Command::Rec { mode, max_scope } => cmd_rec(cli, mode, max_scope),
        Command::Witness { max_u, k_max } => cmd_witness(cli, max_u, k_max),
        Command::Language { n } => cmd_language(cli, n),
        Command::Special { n, side } => cmd_special(cli, n, side),
        Command::Periodic { max_period } => cmd_periodic(cli, max_period),
        Command::Tower { scope } => cmd_tower(cli, scope),
        Command::Eigen { j, len } => cmd_eigen(cli, j, len),
        Command::Gallery => cmd_gallery(cli),
    }
}

fn core_err(e: Error) -> String {
    e.to_string()
}

fn resolve_morphism(cli: &Cli) -> Result<Morphism, String> {
    let text = cli
        .morphism
        .as_ref()
        .ok_or("a morphism is required: pass -m \"a:ab,b:a\" or -m @rules.txt")?;
    let spec = match text.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
        }
        None => text.clone(),
    };
    Morphism::parse(&spec).map_err(|e| format!("bad morphism spec: {e}"))
}

fn build_lang(m: &Morphism, horizon: usize, depth: usize) -> Result<FactorLanguage, String> {
    FactorLanguage::build(m, horizon, depth.max(2 * horizon)).map_err(core_err)
}

fn witness_config(cli: &Cli, max_u: usize, k_max: u32) -> WitnessConfig {
    WitnessConfig {
        u_len_max: max_u,
        k_max,
        depth: cli.depth,
        shift_max: cli.seed_depth,
        prefix_pow_max: cli.seed_depth.max(1),
        ..WitnessConfig::default()
    }
}

/// First expandable fixed point of a small power, the default sample point.
fn default_sample_point(m: &Morphism) -> Option<SequenceGen> {
    for power in 1..=4u32 {
        for a in m.domain().letters() {
            if let Ok(gen) = SequenceGen::fixed_point(m, a, power) {
                return Some(gen);
            }
        }
    }
    None
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string(value).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}

fn fmt_opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "none".into(),
    }
}

fn cmd_analyze(cli: &Cli) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let horizon = 16usize;
    let lang = build_lang(&m, horizon, cli.depth)?;
    let profile = morphism_profile(&m);
    let complexity = lang.complexity_profile(horizon - 1).map_err(core_err)?;
    // Refuting a spurious period-p candidate takes factors well past 2p, so
    // the periodic scan gets its own deeper language.
    let p_max = 8usize;
    let plang = build_lang(&m, 3 * p_max, cli.depth)?;
    let periodic = find_periodic_points(&plang, p_max).map_err(core_err)?;

    if cli.json {
        return emit(&report::AnalyzeJson {
            morphism: m.to_string(),
            horizon,
            profile: report::profile_json(&profile),
            language: report::language_json(&m, &lang, &complexity, &periodic),
        })
        .map(|()| ExitCode::SUCCESS);
    }

    println!("morphism: {m}");
    println!("horizon: {horizon}");
    println!("profile:");
    println!("  primitive: {}", fmt_opt(&profile.primitive));
    println!("  right-marked: {}", profile.right_marked);
    println!("  suffix code: {}", profile.suffix_code);
    println!("  injective on letters: {}", profile.injective_on_letters);
    println!("  constant length: {}", fmt_opt(&profile.constant_length));
    let erasable: String = profile.erasable_letters.iter().collect();
    println!(
        "  erasable letters: {}",
        if erasable.is_empty() { "none".into() } else { erasable }
    );
    let p: Vec<String> = complexity.p.iter().map(|v| v.to_string()).collect();
    let s: Vec<String> = complexity.s.iter().map(|v| v.to_string()).collect();
    println!("complexity p_1..p_{}: {}", complexity.p.len(), p.join(" "));
    println!("first differences: {}", s.join(" "));
    let rendered: Vec<String> = periodic.iter().map(|p| p.word.render(m.domain())).collect();
    println!(
        "periodic points (period <= {p_max}): {}",
        if rendered.is_empty() { "none".into() } else { rendered.join(" ") }
    );
    Ok(ExitCode::SUCCESS)
}

fn print_witness(m: &Morphism, w: &Witness) {
    match w {
        Witness::Branch(b) => {
            let dom = m.domain();
            println!(
                "witness: u={} u'={} v={} k={} k'={} x={} certified to depth {}",
                b.u.render(dom),
                b.u_prime.render(dom),
                b.v.render(dom),
                b.k,
                b.k_prime,
                b.x.describe(),
                b.certified_depth
            );
        }
        Witness::Phase(p) => {
            let reps: Vec<String> = p
                .reps
                .iter()
                .map(|(r, k)| format!("({},{})", r.render(m.domain()), k))
                .collect();
            println!(
                "witness: periodic point ({})^inf with representations {} certified to depth {}",
                p.period_word.render(m.domain()),
                reps.join(" "),
                p.certified_depth
            );
        }
    }
}

fn cmd_rec(cli: &Cli, mode: ModeArg, max_scope: usize) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let horizon = (2 * max_scope + 3).max(16);
    let lang = build_lang(&m, horizon, cli.depth)?;
    let verdict = match mode {
        ModeArg::TwoSided => two_sided_verdict(&m, &lang, max_scope).map_err(core_err)?,
        ModeArg::OneSided => {
            one_sided_verdict(&m, &lang, max_scope, &witness_config(cli, 3, 4)).map_err(core_err)?
        }
    };

    if cli.json {
        emit(&report::verdict_json(&m, &verdict))?;
    } else {
        println!(
            "mode: {}",
            if mode == ModeArg::OneSided { "one-sided" } else { "two-sided" }
        );
        println!("status: {}", report::status_str(&verdict.status));
        match verdict.status {
            RecStatus::Recognizable { scope: Some(n) } => {
                println!("scope: {n} (searched to {})", verdict.searched_to)
            }
            RecStatus::Recognizable { scope: None } => {
                println!("scope: none needed (right-marked fast path)")
            }
            _ => println!("searched to: {}", verdict.searched_to),
        }
        for w in &verdict.witnesses {
            print_witness(&m, w);
        }
    }
    if cli.strict && verdict.status == RecStatus::Unknown {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_witness(cli: &Cli, max_u: usize, k_max: u32) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let lang = build_lang(&m, 24, cli.depth)?;
    let cfg = witness_config(cli, max_u, k_max);
    let wits = witness_search(&m, &lang, &cfg).map_err(core_err)?;

    if cli.json {
        let out: Vec<report::BranchJson> =
            wits.iter().map(|w| report::branch_json(&m, w)).collect();
        return emit(&serde_json::json!({ "depth": cli.depth, "witnesses": out }))
            .map(|()| ExitCode::SUCCESS);
    }
    if wits.is_empty() {
        println!("no witnesses found (u up to {max_u}, depth {})", cli.depth);
    } else {
        for w in &wits {
            print_witness(&m, &Witness::Branch(w.clone()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_language(cli: &Cli, n: usize) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let horizon = (n + 1).max(4);
    let lang = build_lang(&m, horizon, cli.depth)?;
    let complexity = lang.complexity_profile(n).map_err(core_err)?;
    let plang = build_lang(&m, 24, cli.depth)?;
    let periodic = find_periodic_points(&plang, 8).map_err(core_err)?;

    if cli.json {
        return emit(&report::language_json(&m, &lang, &complexity, &periodic))
            .map(|()| ExitCode::SUCCESS);
    }
    println!("morphism: {m}");
    println!("language to length {n} (horizon {horizon}):");
    for len in 1..=n {
        let words = lang.words_of_len(len).map_err(core_err)?;
        let mut shown: Vec<String> = words.iter().take(12).map(|w| w.render(m.codomain())).collect();
        if words.len() > shown.len() {
            shown.push(format!("... {} more", words.len() - shown.len()));
        }
        println!("  n={len} p={} : {}", words.len(), shown.join(" "));
    }
    println!("saturated up to length {}", lang.saturated_up_to());
    Ok(ExitCode::SUCCESS)
}

fn cmd_special(cli: &Cli, n: usize, side: SideArg) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let horizon = (n + 2).max(16);
    let lang = build_lang(&m, horizon, cli.depth)?;
    let core_side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let mut factors = std::collections::BTreeMap::new();
    for len in 1..=n {
        let words = lang.special_factors(len, core_side).map_err(core_err)?;
        factors.insert(
            len.to_string(),
            words.iter().map(|w| w.render(m.codomain())).collect::<Vec<_>>(),
        );
    }
    // Infinite special sequences exist on the left of one-sided shifts.
    let generators = if side == SideArg::Left {
        let cfg = SpecialSeqConfig { shift_max: cli.seed_depth, ..SpecialSeqConfig::default() };
        left_special_sequences(&m, &lang, &cfg).map_err(core_err)?
    } else {
        Vec::new()
    };

    if cli.json {
        return emit(&report::SpecialJson {
            side: if side == SideArg::Left { "left".into() } else { "right".into() },
            horizon,
            factors,
            generators: generators.iter().map(|g| report::generator_json(&m, g)).collect(),
        })
        .map(|()| ExitCode::SUCCESS);
    }
    println!("morphism: {m}");
    for (len, words) in &factors {
        println!(
            "  {}-special of length {len}: {}",
            if side == SideArg::Left { "left" } else { "right" },
            if words.is_empty() { "none".into() } else { words.join(" ") }
        );
    }
    for g in &generators {
        let exts: Vec<String> =
            g.extensions.iter().map(|&l| m.domain().symbol(l).to_string()).collect();
        println!(
            "left-special sequence: {} extensions {{{}}} certified to depth {}{}",
            g.gen.describe(),
            exts.join(","),
            g.certified_depth,
            if g.non_minimal_family { " (periodic family)" } else { "" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_periodic(cli: &Cli, max_period: usize) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let horizon = (3 * max_period).max(8);
    let lang = build_lang(&m, horizon, cli.depth)?;
    let points = find_periodic_points(&lang, max_period).map_err(core_err)?;

    if cli.json {
        let words: Vec<String> = points.iter().map(|p| p.word.render(m.domain())).collect();
        return emit(&serde_json::json!({ "max_period": max_period, "periodic_points": words }))
            .map(|()| ExitCode::SUCCESS);
    }
    if points.is_empty() {
        println!("no periodic points with period <= {max_period}");
    } else {
        for p in &points {
            println!("periodic point: ({})^inf", p.word.render(m.domain()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tower(cli: &Cli, scope: Option<usize>) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let scope = match scope {
        Some(s) => s,
        None => {
            let lang = build_lang(&m, 24, cli.depth)?;
            match two_sided_verdict(&m, &lang, 8).map_err(core_err)?.status {
                RecStatus::Recognizable { scope: Some(n) } => n,
                _ => return Err("no reading scope found; pass --scope explicitly".into()),
            }
        }
    };
    let lang = build_lang(&m, (2 * scope + 3).max(16), cli.depth)?;
    let table = tower_partition(&m, &lang, scope).map_err(core_err)?;

    if cli.json {
        return emit(&report::tower_json(&m, &table)).map(|()| ExitCode::SUCCESS);
    }
    println!("tower partition at scope {scope}:");
    for ((letter, phase), windows) in &table.cells {
        let rendered: Vec<String> = windows.iter().map(|w| w.render(m.codomain())).collect();
        println!(
            "  cell ({}, {phase}): {}",
            m.domain().symbol(*letter),
            rendered.join(" ")
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eigen(cli: &Cli, j: usize, len: usize) -> Result<ExitCode, String> {
    let m = resolve_morphism(cli)?;
    let lang = build_lang(&m, 24, cli.depth)?;
    let x = default_sample_point(&m)
        .ok_or("no fixed point of a small power to sample; the check needs one")?;
    let rep = eigen_check(&m, &lang, j, &x, len).map_err(core_err)?;

    if cli.json {
        return emit(&report::eigen_json(&rep)).map(|()| ExitCode::SUCCESS);
    }
    println!("candidate eigenvalue: e^(2 pi i {}/{})", rep.j, rep.h);
    println!("sample point: {}", x.describe());
    println!(
        "checked {} adjacent pairs over {} positions, max defect {}",
        rep.positions_checked, rep.sample_len, rep.max_defect
    );
    println!(
        "{}",
        if rep.trivial {
            "passed (constant eigenfunction)"
        } else if rep.passed {
            "passed"
        } else {
            "failed"
        }
    );
    Ok(ExitCode::SUCCESS)
}

struct GalleryRow {
    name: &'static str,
    morphism: &'static str,
    check: String,
    ok: bool,
    detail: String,
}

fn cmd_gallery(cli: &Cli) -> Result<ExitCode, String> {
    let depth = cli.depth.min(1024);
    let mut rows: Vec<GalleryRow> = Vec::new();
    let mut push = |name, morphism, check: &str, outcome: Result<(bool, String), String>| {
        let (ok, detail) = match outcome {
            Ok((ok, detail)) => (ok, detail),
            Err(e) => (false, e),
        };
        rows.push(GalleryRow { name, morphism, check: check.to_string(), ok, detail });
    };

    let two_status = |spec: &str, want: &str| -> Result<(bool, String), String> {
        let m = Morphism::parse(spec).map_err(core_err)?;
        let lang = build_lang(&m, 24, depth)?;
        let v = two_sided_verdict(&m, &lang, 8).map_err(core_err)?;
        let got = report::status_str(&v.status);
        Ok((got == want, format!("got {got}")))
    };
    let one_status = |spec: &str, want: &str| -> Result<(bool, String), String> {
        let m = Morphism::parse(spec).map_err(core_err)?;
        let lang = build_lang(&m, 24, depth)?;
        let cfg = WitnessConfig { depth, ..WitnessConfig::default() };
        let v = one_sided_verdict(&m, &lang, 8, &cfg).map_err(core_err)?;
        let got = report::status_str(&v.status);
        Ok((got == want, format!("got {got}")))
    };

    push("fibonacci", "a:ab,b:a", "primitive", {
        (|| {
            let m = Morphism::parse("a:ab,b:a").map_err(core_err)?;
            let got = morphism_profile(&m).primitive == Some(true);
            Ok((got, String::new()))
        })()
    });
    push(
        "fibonacci",
        "a:ab,b:a",
        "two-sided recognizable",
        two_status("a:ab,b:a", "recognizable"),
    );
    push(
        "fibonacci",
        "a:ab,b:a",
        "one-sided recognizable",
        one_status("a:ab,b:a", "recognizable"),
    );
    push(
        "anti-fibonacci",
        "a:ba,b:a",
        "one-sided refuted by the Fibonacci tail",
        (|| {
            let m = Morphism::parse("a:ba,b:a").map_err(core_err)?;
            let lang = build_lang(&m, 24, depth)?;
            let cfg = WitnessConfig { depth, ..WitnessConfig::default() };
            let wits = witness_search(&m, &lang, &cfg).map_err(core_err)?;
            let dom = m.domain();
            let hit = wits.iter().any(|w| {
                w.u.render(dom) == "b" && w.u_prime.render(dom) == "a" && w.v.render(dom) == "a"
            });
            Ok((hit, format!("{} witnesses", wits.len())))
        })(),
    );
    push(
        "period-doubling",
        "a:ab,b:aa",
        "one-sided recognizable",
        one_status("a:ab,b:aa", "recognizable"),
    );
    push(
        "conjugate period-doubling",
        "a:ba,b:aa",
        "two-sided recognizable",
        two_status("a:ba,b:aa", "recognizable"),
    );
    push(
        "conjugate period-doubling",
        "a:ba,b:aa",
        "one-sided refuted",
        one_status("a:ba,b:aa", "not_recognizable"),
    );
    push(
        "conjugate period-doubling",
        "a:ba,b:aa",
        "weakly one-sided recognizable",
        (|| {
            let m = Morphism::parse("a:ba,b:aa").map_err(core_err)?;
            let lang = build_lang(&m, 24, depth)?;
            let weak = weak_one_sided_check(&m, &lang, depth.min(512)).map_err(core_err)?;
            Ok((weak.all_unique, format!("{} candidates", weak.checked.len())))
        })(),
    );
    push(
        "thue-morse",
        "a:ab,b:ba",
        "j=1 eigenvalue",
        (|| {
            let m = Morphism::parse("a:ab,b:ba").map_err(core_err)?;
            let lang = build_lang(&m, 16, depth)?;
            let x = default_sample_point(&m).ok_or("no sample point")?;
            let rep = eigen_check(&m, &lang, 1, &x, 4096).map_err(core_err)?;
            Ok((rep.passed, format!("max defect {}", rep.max_defect)))
        })(),
    );
    push(
        "erasing",
        "a:ab,b:ac,c:",
        "erasable letter c, still two-sided recognizable",
        (|| {
            let m = Morphism::parse("a:ab,b:ac,c:").map_err(core_err)?;
            let erasable = morphism_profile(&m).erasable_letters == vec!['c'];
            let (rec, detail) = two_status("a:ab,b:ac,c:", "recognizable")?;
            Ok((erasable && rec, detail))
        })(),
    );
    push(
        "doubling",
        "a:aa",
        "two-sided refuted at the periodic point",
        two_status("a:aa", "not_recognizable"),
    );
    push(
        "doubling",
        "a:aa",
        "recognizable at aperiodic points",
        (|| {
            let m = Morphism::parse("a:aa").map_err(core_err)?;
            let lang = build_lang(&m, 16, depth)?;
            let v = two_sided_verdict_aperiodic(&m, &lang, 4).map_err(core_err)?;
            Ok((
                matches!(v.status, RecStatus::Recognizable { .. }),
                format!("got {}", report::status_str(&v.status)),
            ))
        })(),
    );
    push(
        "durand",
        "a:abac,b:ab,c:c",
        "periodic points = {c}",
        (|| {
            let m = Morphism::parse("a:abac,b:ab,c:c").map_err(core_err)?;
            let lang = build_lang(&m, 24, depth)?;
            let pts = find_periodic_points(&lang, 8).map_err(core_err)?;
            let words: Vec<String> = pts.iter().map(|p| p.word.render(m.domain())).collect();
            Ok((words == ["c"], format!("got {{{}}}", words.join(","))))
        })(),
    );
    push(
        "durand",
        "a:abac,b:ab,c:c",
        "two-sided recognizable",
        two_status("a:abac,b:ab,c:c", "recognizable"),
    );
    push(
        "durand",
        "a:abac,b:ab,c:c",
        "one-sided refuted",
        one_status("a:abac,b:ab,c:c", "not_recognizable"),
    );

    let passed = rows.iter().all(|r| r.ok);
    if cli.json {
        let results: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "name": r.name,
                    "morphism": r.morphism,
                    "check": r.check,
                    "ok": r.ok,
                    "detail": r.detail,
                })
            })
            .collect();
        emit(&serde_json::json!({ "passed": passed, "results": results }))?;
    } else {
        for r in &rows {
            println!(
                "[{}] {} ({}): {}{}",
                if r.ok { " ok " } else { "FAIL" },
                r.name,
                r.morphism,
                r.check,
                if r.detail.is_empty() { String::new() } else { format!(" - {}", r.detail) }
            );
        }
        println!("gallery: {}", if passed { "all checks passed" } else { "FAILURES" });
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
