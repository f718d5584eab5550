//! Acceptance checks. Runs as a plain binary so every criterion prints one
//! PASS or FAIL line; the process fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{corpus, oracle, TREFOIL};
use knot_atoms::bracket::{
    bracket_over_partition, span_bound, span_bound_report, SmoothingState, DEFAULT_STATE_LIMIT,
};
use knot_atoms::cli::{cmd_batch, BUNDLED_CORPUS};
use knot_atoms::diagram::{
    cable, connected_sum, mirror, parse_gauss, parse_pd, serialize_pd, Dart,
};
use knot_atoms::minimality::{
    cabling_consistency, certify_classical, detect_reducing_moves, generate_positive_braid,
    CertifyOptions, Predicate, Verdict,
};
use knot_atoms::sample::random_connected_diagram;
use knot_atoms::{is_good, kauffman_bracket, Atom, Colour};
use rand::seq::SliceRandom;
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, secs: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(secs), || {
        format!("took {elapsed:.2?}, limit {secs} s")
    })
}

fn span_bound_on_random() -> Check {
    let start = Instant::now();
    let mut rng = common::rng(2024);
    let count = 300;
    for i in 0..count {
        let n = 1 + i % 10;
        let d = random_connected_diagram(&mut rng, n);
        let r = span_bound_report(&d).map_err(|e| e.to_string())?;
        ensure(r.holds, || {
            format!(
                "span {} > bound {} for {}",
                r.span,
                r.bound,
                serialize_pd(&d)
            )
        })?;
    }
    within(start.elapsed(), 60)?;
    Ok(format!(
        "{count} diagrams, n <= 10, in {:.2?}",
        start.elapsed()
    ))
}

/// Sequences of exponents >= 2 with sum at most `budget`.
fn exponent_sequences(budget: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(seq) = stack.pop() {
        let used: i32 = seq.iter().sum();
        for e in 2..=budget - used {
            let mut next = seq.clone();
            next.push(e);
            stack.push(next.clone());
            out.push(next);
        }
    }
    out.sort();
    out
}

fn equality_on_good_diagrams() -> Check {
    let mut alternating = 0;
    for (e, d) in corpus().iter().filter(|(e, _)| e.has_tag("alternating")) {
        let r = span_bound_report(d).map_err(|x| x.to_string())?;
        ensure(is_good(d).good && r.equality, || {
            format!("{}: good/equality failed", e.name)
        })?;
        alternating += 1;
    }
    let mut braids = 0;
    for strands in 2..=6 {
        for exps in exponent_sequences(10) {
            let Ok(b) = generate_positive_braid(strands, &exps) else {
                continue;
            };
            if !b.knot {
                continue;
            }
            let r = span_bound_report(&b.diagram).map_err(|x| x.to_string())?;
            ensure(b.good && r.equality, || {
                format!(
                    "{}: good={} span={} bound={}",
                    b.word, b.good, r.span, r.bound
                )
            })?;
            braids += 1;
        }
    }
    ensure(alternating == 14, || {
        format!("expected 14 alternating entries, found {alternating}")
    })?;
    Ok(format!(
        "{alternating} alternating diagrams, {braids} positive braid knots"
    ))
}

fn trefoil_end_to_end() -> Check {
    let oracle_span = oracle::span(&oracle::bracket(&oracle::parse_pd(TREFOIL)));
    ensure(oracle_span == 12, || format!("oracle span {oracle_span}"))?;
    let t = parse_pd(TREFOIL).map_err(|e| e.to_string())?;
    let c = certify_classical(&t, &CertifyOptions::default());
    ensure(c.verdict == Verdict::MinimalClassical, || {
        format!("verdict {:?}", c.verdict)
    })?;
    ensure((c.n, c.chi, c.span) == (3, 2, Some(oracle_span)), || {
        format!("n={} chi={} span={:?}", c.n, c.chi, c.span)
    })?;
    Ok("minimal-classical, n=3, chi=2, span 12 (oracle 12)".into())
}

fn negative_controls() -> Check {
    let opts = CertifyOptions::default();
    let kink = certify_classical(&parse_pd("X(1,2,2,1)").unwrap(), &opts);
    ensure(
        kink.verdict == Verdict::Inconclusive
            && kink.failed == Some(Predicate::Good)
            && !kink.witnesses.is_empty(),
        || format!("kink: {}", kink.to_json()),
    )?;
    let virt = certify_classical(&parse_gauss("O1+O2+U1+U2+").unwrap(), &opts);
    ensure(
        virt.verdict == Verdict::Inconclusive
            && virt.failed == Some(Predicate::Classical)
            && !virt.good
            && !virt.witnesses.is_empty(),
        || format!("virtual trefoil: {}", virt.to_json()),
    )?;
    Ok(format!(
        "kink fails good ({} witness), virtual trefoil fails classical ({} witnesses)",
        kink.witnesses.len(),
        virt.witnesses.len()
    ))
}

fn cabling_counts() -> Check {
    let start = Instant::now();
    let t = parse_pd(TREFOIL).unwrap();
    let r = cabling_consistency(&t, 2).map_err(|e| e.to_string())?;
    ensure(
        (r.vertices, r.edges, r.cells, r.chi_m, r.cable_good) == (12, 24, 10, -2, true),
        || format!("{r:?}"),
    )?;
    let c2 = cable(&t, 2).unwrap();
    let states = 1u64 << c2.crossing_count();
    let measured = kauffman_bracket(&c2)
        .map_err(|e| e.to_string())?
        .span()
        .unwrap();
    ensure(
        states == 4096 && measured == 40 && measured == 4 * 12 + 2 * (-2 - 2),
        || format!("states {states}, span {measured}"),
    )?;
    for m in 1..=3 {
        let r = cabling_consistency(&t, m).map_err(|e| e.to_string())?;
        ensure(r.counts_ok && r.identity_ok && r.cable_good, || {
            format!("m={m}: {r:?}")
        })?;
    }
    within(start.elapsed(), 10)?;
    Ok(format!(
        "V,E,F,chi = 12,24,10,-2; span 40 over 4096 states; identity m=1..3; {:.2?}",
        start.elapsed()
    ))
}

fn mirror_and_sum() -> Check {
    let entries = corpus();
    for (e, d) in &entries {
        let b = kauffman_bracket(d).map_err(|x| x.to_string())?;
        let mb = kauffman_bracket(&mirror(d)).map_err(|x| x.to_string())?;
        ensure(mb == b.invert_variable(), || {
            format!("{}: mirror bracket", e.name)
        })?;
    }
    let t = parse_pd(TREFOIL).unwrap();
    let m = mirror(&t);
    let s = connected_sum(&t, Dart(0), &m, Dart(0)).map_err(|e| e.to_string())?;
    let chi = Atom::build(&s).euler_characteristic();
    let product = &kauffman_bracket(&t).unwrap() * &kauffman_bracket(&m).unwrap();
    ensure(
        s.writhe() == 0
            && is_good(&s).good
            && s.crossing_count() == 6
            && chi == 2
            && kauffman_bracket(&s).unwrap() == product,
        || {
            format!(
                "square knot: writhe {} chi {chi} {}",
                s.writhe(),
                serialize_pd(&s)
            )
        },
    )?;
    Ok(format!(
        "{} corpus mirrors; square knot writhe 0, good, n=6, chi=2, bracket product",
        entries.len()
    ))
}

fn reducing_moves_imply_bad() -> Check {
    let mut rng = common::rng(99);
    let (mut with_sites, mut total) = (0, 0);
    let mut diagrams: Vec<_> = corpus().into_iter().map(|(_, d)| d).collect();
    for i in 0..3000 {
        diagrams.push(random_connected_diagram(&mut rng, 1 + i % 10));
    }
    for d in &diagrams {
        total += 1;
        let moves = detect_reducing_moves(d);
        if moves.is_empty() {
            continue;
        }
        with_sites += 1;
        ensure(!is_good(d).good, || {
            format!("counterexample: {} moves {moves:?}", serialize_pd(d))
        })?;
    }
    Ok(format!(
        "{with_sites} of {total} diagrams have a site, none good"
    ))
}

fn loop_cell_duality() -> Check {
    let entries = corpus();
    for (e, d) in &entries {
        let n = d.crossing_count();
        let atom = Atom::build(d);
        let black = SmoothingState::uniform(Colour::Black, n).loop_count(d);
        let white = SmoothingState::uniform(Colour::White, n).loop_count(d);
        let reference = oracle::extreme_loops(&oracle::parse_pd(&e.pd_text));
        ensure(
            (black, white) == (atom.black_cell_count(), atom.white_cell_count())
                && (black, white) == reference,
            || {
                format!(
                    "{}: loops {black},{white} cells {},{}",
                    e.name,
                    atom.black_cell_count(),
                    atom.white_cell_count()
                )
            },
        )?;
    }
    Ok(format!("{} corpus diagrams", entries.len()))
}

fn determinism() -> Check {
    let first = cmd_batch(BUNDLED_CORPUS, DEFAULT_STATE_LIMIT, true);
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| cmd_batch(BUNDLED_CORPUS, DEFAULT_STATE_LIMIT, true));
    ensure(
        first == cmd_batch(BUNDLED_CORPUS, DEFAULT_STATE_LIMIT, true) && first == single,
        || "batch JSON differs between runs".into(),
    )?;

    let mut rng = common::rng(5);
    let t = parse_pd(TREFOIL).unwrap();
    let seven = corpus()
        .into_iter()
        .find(|(e, _)| e.name == "7_7")
        .unwrap()
        .1;
    let subjects = [cable(&t, 2).unwrap(), seven];
    for d in &subjects {
        let total = 1u64 << d.crossing_count();
        let reference = certify_classical(d, &CertifyOptions::default()).to_json();
        let whole =
            bracket_over_partition(d, std::slice::from_ref(&(0..total)), DEFAULT_STATE_LIMIT)
                .unwrap();
        for _ in 0..8 {
            let mut cuts: Vec<u64> = (0..rng.gen_range(1..12))
                .map(|_| rng.gen_range(0..=total))
                .collect();
            cuts.extend([0, total]);
            cuts.sort();
            let mut ranges: Vec<_> = cuts.windows(2).map(|w| w[0]..w[1]).collect();
            ranges.shuffle(&mut rng);
            let p = bracket_over_partition(d, &ranges, DEFAULT_STATE_LIMIT).unwrap();
            ensure(p == whole, || {
                format!("partition {ranges:?} changed the bracket")
            })?;
        }
        ensure(
            reference == certify_classical(d, &CertifyOptions::default()).to_json(),
            || "certificate JSON differs".into(),
        )?;
        let bound = span_bound(d.crossing_count(), Atom::build(d).euler_characteristic());
        ensure(whole.span().unwrap() <= bound, || "span bound".into())?;
    }
    Ok("batch JSON identical across runs and thread counts; shuffled partitions agree".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("span bound on random diagrams", span_bound_on_random),
        ("span equality on good diagrams", equality_on_good_diagrams),
        ("trefoil end to end", trefoil_end_to_end),
        ("negative controls", negative_controls),
        ("cabling counts and span", cabling_counts),
        ("mirror and connected sum", mirror_and_sum),
        ("reducing moves imply not good", reducing_moves_imply_bad),
        ("loop/cell duality", loop_cell_duality),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail})", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} [{name}]: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
