//! Acceptance run: one `PASS`/`FAIL` line per criterion.
//!
//! `cargo test --test acceptance` runs the default tier. Add `-- --long-run`
//! for the eight-element tables (about ten minutes per core).

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_census::analysis::{
    dominance_scan, lemma2_values, logconvex_check, logconvex_sides, logconvex_threshold, plp_scan,
    slc_sufficient_check, slc_sufficient_threshold, thm1_values, LogConvexItem,
};
use matroid_census::bigcomb::BigCount;
use matroid_census::cli;
use matroid_census::enumerate::{build_tables, cross_validate, enumerate_matroids, CountTable, EnumConfig, TableKind};
use matroid_census::erection::{
    expand, knuth_random_matroid, knuth_with_injections, refine, refine_randomized, RandomPolicy, SetFamily,
};
use matroid_census::matroid::{from_flats, validate_bases, SubsetWord};
use matroid_census::paving::{complete_to_paving, u_set, u_size_recursive};

/// Outcome of one criterion: verdict plus a deterministic transcript.
struct Verdict {
    pass: bool,
    summary: String,
    transcript: String,
}

impl Verdict {
    fn new(pass: bool, summary: impl Into<String>, transcript: String) -> Verdict {
        Verdict {
            pass,
            summary: summary.into(),
            transcript,
        }
    }
}

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

fn criterion_1(table: &CountTable) -> Verdict {
    let mismatches = table.mismatches(7);
    let spot = [
        (table.cell(TableKind::AllLabeled, 7, 3), 33442),
        (table.cell(TableKind::LooplessLabeled, 7, 3), 22172),
        (table.cell(TableKind::SimpleLabeled, 7, 4), 18700),
        (table.cell(TableKind::PavingLabeled, 7, 4), 6149),
    ];
    let spots_ok = spot.iter().all(|(got, want)| *got == Some(&big(*want)));
    let totals_ok = table.total(TableKind::AllLabeled, 7) == Some(big(75164))
        && table.total(TableKind::AllNoniso, 7) == Some(big(306));
    let mut out = Vec::new();
    let code = cli::run(
        ["matroid-census", "tables", "--max-n", "7"],
        &mut std::io::empty(),
        &mut out,
        &mut std::io::sink(),
    );
    let cli_ok = code == 0 && out == table.to_csv().into_bytes();
    let mut t = table.to_csv();
    for m in &mismatches {
        writeln!(t, "{m}").unwrap();
    }
    Verdict::new(
        mismatches.is_empty() && spots_ok && totals_ok && cli_ok,
        format!(
            "`tables --max-n 7` exits {code}; all eight tables for n <= 7, {} mismatched cells",
            mismatches.len()
        ),
        t,
    )
}

fn criterion_2(cfg: &EnumConfig, long_run: bool) -> Option<Verdict> {
    if !long_run {
        return None;
    }
    let table = match build_tables(8, &cfg.clone().with_long_run(true)) {
        Ok(t) => t,
        Err(e) => return Some(Verdict::new(false, format!("n = 8 census failed: {e}"), String::new())),
    };
    let mismatches = table.mismatches(8);
    let totals = [
        (TableKind::AllLabeled, 10607540),
        (TableKind::AllNoniso, 1724),
        (TableKind::PavingLabeled, 5137322),
        (TableKind::PavingNoniso, 439),
    ];
    let totals_ok = totals.iter().all(|&(k, v)| table.total(k, 8) == Some(big(v)));
    Some(Verdict::new(
        mismatches.is_empty() && totals_ok,
        format!("n = 8 columns, {} mismatched cells", mismatches.len()),
        table.to_csv(),
    ))
}

fn criterion_3(table: &CountTable) -> Verdict {
    let mut t = String::new();
    let mut ok = true;
    let mut rows = 0;
    let mut reports = Vec::new();
    for n in 2..=7 {
        reports.push(thm1_values(n).unwrap());
    }
    for n in 5..=8 {
        reports.push(lemma2_values(n).unwrap());
    }
    for mut r in reports {
        r.attach_table(table);
        if r.n == 8 {
            r.attach_published();
        }
        ok &= r.all_match();
        for row in &r.rows {
            rows += 1;
            let (obs, src) = row.observed.clone().expect("reference value");
            writeln!(t, "{},{},{},{},{}", r.n, row.formula, row.predicted, obs, src).unwrap();
        }
    }
    let at8: Vec<String> = lemma2_values(8)
        .unwrap()
        .rows
        .iter()
        .map(|r| r.predicted.to_string())
        .collect();
    ok &= at8 == ["219", "6", "16865", "40"];
    Verdict::new(
        ok,
        format!("{rows} closed-form values; n = 8 gives {}", at8.join(", ")),
        t,
    )
}

fn criterion_4(table: &CountTable) -> Verdict {
    let cv = cross_validate(table);
    let failed = cv.failures().count();
    let covers = (0..=7).all(|n| cv.checks.iter().any(|c| c.n == n));
    Verdict::new(
        failed == 0 && covers,
        format!("{} relation instances for n <= 7, {failed} failed", cv.checks.len()),
        cv.to_string(),
    )
}

fn criterion_5() -> Verdict {
    let mut t = String::new();
    let mut ok = true;
    let cases = [7usize, 15]
        .iter()
        .flat_map(|&n| (3..=n).map(move |r| (r, n)))
        .chain((3..=5).map(|r| (r, 31)));
    for (r, n) in cases {
        let rec = u_size_recursive(r, n);
        let listed = u_set(r, n).map(|u| u.len());
        let same = matches!((&rec, &listed), (Ok(a), Ok(b)) if *a == BigCount::from(*b));
        ok &= same;
        writeln!(t, "U({r},{n}) = {:?} / {:?}", rec.map(|v| v.to_string()), listed).unwrap();
    }
    let lines = u_set(3, 7).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..128 {
        let v: Vec<SubsetWord> = (0..7)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| lines.members()[i])
            .collect();
        let m = complete_to_paving(&v, 3, 7).unwrap();
        ok &= validate_bases(7, m.bases()) && m.classify().paving;
        seen.insert(m);
    }
    ok &= seen.len() == 128;
    writeln!(t, "distinct completions: {}", seen.len()).unwrap();
    Verdict::new(
        ok,
        format!("recursion exact at n = 7, 15, 31; {} distinct completions", seen.len()),
        t,
    )
}

fn criterion_6(cfg: &EnumConfig) -> Verdict {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut instances = 0;
    for n in 1..=7 {
        for _ in 0..200 {
            let m = loop {
                let m = knuth_random_matroid(n, &RandomPolicy::geometric(rng.random())).unwrap();
                if m.rank() > 0 {
                    break m;
                }
            };
            let lattice = m.flat_lattice();
            let level = &lattice.levels()[rng.random_range(0..m.rank())];
            let previous = SetFamily::new(n, level.iter().copied());
            let mut members = expand(&previous).members().to_vec();
            let base = level[rng.random_range(0..level.len())];
            let extra = rng.random::<u32>() & SubsetWord::full(n).bits() & !base.bits();
            if extra != 0 {
                members.push(SubsetWord::from_bits(base.bits() | extra));
            }
            let family = SetFamily::new(n, members);
            let fixed = refine(&family, &previous);
            ok &= (0..20).all(|_| refine_randomized(&family, &previous, &mut rng) == fixed);
            instances += 1;
        }
    }
    let mut valid = 0;
    for seed in 0..1000u64 {
        let n = 1 + (seed % 7) as usize;
        let m = knuth_random_matroid(n, &RandomPolicy::geometric(seed)).unwrap();
        if validate_bases(n, m.bases()) && m.flat_lattice().validate().is_ok() {
            valid += 1;
        }
    }
    ok &= valid == 1000;
    let mut reached = 0;
    let mut targets = 0;
    for n in 1..=4 {
        for r in 1..=n {
            for target in enumerate_matroids(n, r, 1, cfg).unwrap() {
                targets += 1;
                let levels = target.flat_lattice().into_levels();
                let built = knuth_with_injections(n, |rank, _| levels[rank + 1].clone()).and_then(|l| from_flats(&l));
                reached += (built.as_ref() == Ok(&target)) as usize;
            }
        }
    }
    ok &= reached == targets;
    let summary = format!(
        "{instances} confluence instances x 20 orders, {valid}/1000 random matroids valid, {reached}/{targets} loopless targets reached"
    );
    Verdict::new(ok, summary.clone(), summary)
}

fn criterion_7(cfg: &EnumConfig) -> Verdict {
    let mut t = String::new();
    let mut ok = true;
    let mut scanned = 0;
    for n in 4..=7 {
        let r = plp_scan(n, cfg).unwrap();
        ok &= r.passed() && r.equality_cases == r.trivial_plane_cases;
        scanned += r.scanned;
        writeln!(t, "{r}").unwrap();
    }
    Verdict::new(
        ok,
        format!("{scanned} simple rank-4 matroids, equality only when every 3-set is a plane"),
        t,
    )
}

fn criterion_8(cfg: &EnumConfig) -> Verdict {
    let mut t = String::new();
    let mut ok = true;
    let mut erections = 0;
    for n in 3..=6 {
        let d = dominance_scan(n, cfg).unwrap();
        ok &= d.passed();
        erections += d.erections_checked;
        writeln!(t, "{d}").unwrap();
    }
    Verdict::new(
        ok,
        format!("{erections} erections of simple rank-3 matroids, none beats the free one"),
        t,
    )
}

fn criterion_9() -> Verdict {
    use LogConvexItem::*;
    let mut t = String::new();
    let mut ok = true;
    for item in [II, V, VI] {
        let claimed = item.claimed_threshold();
        let holds_from = logconvex_threshold(item, 5..=200).unwrap();
        let below = logconvex_check(item, claimed - 1).unwrap();
        ok &= holds_from == Some(claimed) && !below;
        writeln!(
            t,
            "item ({item}): holds for n = {claimed}..=200: {}, fails at {}: {}",
            holds_from == Some(claimed),
            claimed - 1,
            !below
        )
        .unwrap();
    }
    let labeled =
        slc_sufficient_check(94, false).unwrap() && slc_sufficient_threshold(false, 3..=200).unwrap() == Some(94);
    let iso = slc_sufficient_check(67, true).unwrap()
        && slc_sufficient_threshold(true, 3..=200)
            .unwrap()
            .is_some_and(|e| e <= 67);
    ok &= labeled && iso;
    writeln!(t, "sufficient condition: labeled from 94: {labeled}, iso at 67: {iso}").unwrap();
    // Reported only: the claimed start for item (i) is contradicted by the tables.
    let (l4, r4) = logconvex_sides(I, 4).unwrap();
    let first = logconvex_threshold(I, 2..=200).unwrap();
    writeln!(
        t,
        "item (i): at n = 4, {l4} vs {r4}; holds from n = {first:?} (claimed 4)"
    )
    .unwrap();
    Verdict::new(
        ok,
        format!(
            "items ii, v, vi exact from 9, 11, 8; item i holds only from {}",
            first.map_or(0, |v| v)
        ),
        t,
    )
}

/// Criteria 1 and 3 to 9 under one worker count.
fn run_all(workers: usize) -> Vec<(u32, Verdict)> {
    let cfg = EnumConfig::default().with_workers(workers);
    let table = build_tables(7, &cfg).expect("n <= 7 census");
    vec![
        (1, criterion_1(&table)),
        (3, criterion_3(&table)),
        (4, criterion_4(&table)),
        (5, criterion_5()),
        (6, criterion_6(&cfg)),
        (7, criterion_7(&cfg)),
        (8, criterion_8(&cfg)),
        (9, criterion_9()),
    ]
}

fn line(id: u32, pass: bool, text: &str) -> bool {
    println!("criterion {id:>2}: {} {text}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn main() -> ExitCode {
    let long_run = std::env::args().any(|a| a == "--long-run");
    let start = Instant::now();
    let base = run_all(1);
    let mut all = true;
    for (id, v) in &base {
        all &= line(*id, v.pass, &v.summary);
        if *id == 1 {
            match criterion_2(&EnumConfig::default(), long_run) {
                Some(v2) => all &= line(2, v2.pass, &v2.summary),
                None => println!("criterion  2: SKIP n = 8 long-run tier; pass `-- --long-run` to run it"),
            }
        }
    }
    let mut differing = Vec::new();
    for workers in [4, 16] {
        for ((id, a), (_, b)) in base.iter().zip(run_all(workers)) {
            if a.transcript != b.transcript || a.pass != b.pass {
                differing.push(format!("{id}@{workers}"));
            }
        }
    }
    all &= line(
        10,
        differing.is_empty(),
        &if differing.is_empty() {
            "criteria 1, 3-9 byte-identical with 1, 4 and 16 workers".to_string()
        } else {
            format!("outputs differ: {}", differing.join(" "))
        },
    );
    println!("acceptance finished in {:.1?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
