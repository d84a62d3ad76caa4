//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use nugatory::branched_cover::{branched_homology, knot_determinant};
use nugatory::diagram::{all_goeritz, default_goeritz, pretzel_diagram};
use nugatory::filling::{
    common_distance_one_slopes, element_order, filling_presentation, rational_longitude_constant, slope_distance,
    MData, Slope,
};
use nugatory::intlinalg::{determinant, minor_gcds, smith_normal_form, BigMatrix, Int, IntMatrix};
use nugatory::obstructions::crossing_number;
use nugatory::{bundled_table, AbelianGroup};
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nugatory"))
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = bin().args(args).env_remove("NUGATORY_DATA").output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "`nugatory {}` exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn group(f: &[u64]) -> AbelianGroup {
    AbelianGroup::new(f.to_vec()).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn homology_of(t: &nugatory::KnotTable, name: &str) -> Result<(AbelianGroup, u64), String> {
    let k = t.get(name).ok_or(format!("{name} missing from bundled table"))?;
    let pd = k.pd.as_ref().ok_or(format!("{name} has no diagram"))?;
    let g = default_goeritz(pd).map_err(|e| e.to_string())?;
    Ok((branched_homology(&g).map_err(|e| e.to_string())?, knot_determinant(&g).map_err(|e| e.to_string())?))
}

fn nine_crossing_homology() -> Outcome {
    let start = Instant::now();
    let t = bundled_table();
    let expected = [
        ("9_35", group(&[3, 9])),
        ("9_37", group(&[3, 15])),
        ("9_41", group(&[7, 7])),
        ("9_46", group(&[3, 3])),
        ("9_49", group(&[5, 5])),
    ];
    for (name, want) in &expected {
        let (got, _) = homology_of(&t, name)?;
        check(&got == want, || format!("{name}: got {got}, expected {want}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("5 groups exact in {:.2?}", start.elapsed()))
}

const TEN_CROSSING: [(&str, u64, &[u64]); 56] = [
    ("10_49", 59, &[]),
    ("10_50", 53, &[]),
    ("10_51", 67, &[]),
    ("10_52", 59, &[]),
    ("10_53", 73, &[]),
    ("10_54", 47, &[]),
    ("10_55", 61, &[]),
    ("10_56", 65, &[]),
    ("10_57", 79, &[]),
    ("10_58", 65, &[]),
    ("10_61", 33, &[]),
    ("10_63", 57, &[]),
    ("10_65", 63, &[63]),
    ("10_66", 75, &[75]),
    ("10_67", 63, &[63]),
    ("10_68", 57, &[]),
    ("10_72", 73, &[]),
    ("10_74", 63, &[3, 21]),
    ("10_76", 57, &[]),
    ("10_77", 63, &[63]),
    ("10_80", 71, &[]),
    ("10_83", 83, &[]),
    ("10_84", 87, &[]),
    ("10_86", 85, &[]),
    ("10_87", 81, &[81]),
    ("10_90", 77, &[]),
    ("10_92", 89, &[]),
    ("10_93", 67, &[]),
    ("10_95", 91, &[]),
    ("10_97", 87, &[]),
    ("10_98", 81, &[3, 27]),
    ("10_101", 85, &[]),
    ("10_102", 73, &[]),
    ("10_103", 75, &[5, 15]),
    ("10_108", 63, &[63]),
    ("10_111", 77, &[]),
    ("10_113", 111, &[]),
    ("10_114", 93, &[]),
    ("10_117", 103, &[]),
    ("10_119", 101, &[]),
    ("10_120", 105, &[]),
    ("10_121", 115, &[]),
    ("10_122", 105, &[]),
    ("10_128", 11, &[]),
    ("10_129", 25, &[25]),
    ("10_130", 17, &[]),
    ("10_131", 31, &[]),
    ("10_134", 23, &[]),
    ("10_135", 37, &[]),
    ("10_142", 15, &[]),
    ("10_144", 39, &[]),
    ("10_146", 33, &[]),
    ("10_147", 27, &[27]),
    ("10_162", 35, &[]),
    ("10_164", 45, &[45]),
    ("10_165", 39, &[]),
];

fn ten_crossing_homology() -> Outcome {
    let start = Instant::now();
    let t = bundled_table();
    let mut groups = 0;
    for (name, det, h) in TEN_CROSSING {
        let (got, got_det) = homology_of(&t, name)?;
        check(got_det == det, || format!("{name}: determinant {got_det}, expected {det}"))?;
        if !h.is_empty() {
            check(got == group(h), || format!("{name}: got {got}, expected {}", group(h)))?;
            groups += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(2))?;
    Ok(format!("{groups} groups and 56 determinants exact in {:.2?}", start.elapsed()))
}

fn open_line(report: &str) -> Result<Vec<String>, String> {
    let line = report.lines().find(|l| l.starts_with("Open")).ok_or("no Open line in report")?;
    let rest = line.split_once(':').ok_or("malformed Open line")?.1.trim();
    Ok(if rest == "none" { Vec::new() } else { rest.split(", ").map(str::to_string).collect() })
}

fn classification() -> Outcome {
    let mut ten = open_line(&run_cli(&["tables", "--max-crossings", "10"])?)?;
    ten.sort();
    let mut want: Vec<String> =
        ["10_65", "10_66", "10_67", "10_77", "10_87", "10_98", "10_108", "10_129", "10_147", "10_164"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    want.sort();
    check(ten == want, || format!("ten-crossing open list {ten:?}"))?;
    let nine = open_line(&run_cli(&["tables", "--max-crossings", "9"])?)?;
    check(nine.is_empty(), || format!("nine-crossing open list {nine:?}"))?;
    Ok("10 open through ten crossings, none through nine".into())
}

fn oracle() -> Outcome {
    let start = Instant::now();
    let out = run_cli(&["oracle", "--max-order", "2000"])?;
    let elapsed = start.elapsed();
    check(out.lines().any(|l| l == "0 counterexamples"), || format!("output ended {:?}", out.lines().last()))?;
    within(elapsed, Duration::from_secs(60))?;
    let enumerated = out.lines().next().unwrap_or_default().to_string();
    let loose = run_cli(&["oracle", "--max-order", "2000", "--allow-non-squarefree"])?;
    check(loose.lines().any(|l| l.trim() == "ell=3 r=[9] u=[0] h=[3]"), || {
        "ell=3 r=[9] u=[0] h=[3] not reported".into()
    })?;
    Ok(format!("{enumerated}; 0 counterexamples in {elapsed:.2?}"))
}

fn random_mdata(rng: &mut ChaCha8Rng) -> MData {
    let k = rng.gen_range(0..=3);
    let mut r: Vec<u64> = Vec::new();
    for _ in 0..k {
        let next = match r.last() {
            None => rng.gen_range(2..=12),
            Some(&last) => last * rng.gen_range(1..=3),
        };
        r.push(next);
    }
    let u: Vec<u64> = r.iter().map(|&ri| rng.gen_range(0..ri)).collect();
    let h: Vec<u64> = r.iter().map(|&ri| rng.gen_range(0..ri)).collect();
    MData::new(element_order(&h, &r), r, u, h).expect("generated data is valid")
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn random_slope(rng: &mut ChaCha8Rng, bound: i64) -> Slope {
    loop {
        let (a, b) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if gcd(a, b) == 1 {
            return Slope::new(a, b).unwrap();
        }
    }
}

fn filling_order_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut checked = 0;
    for _ in 0..1000 {
        let m = random_mdata(&mut rng);
        let c = rational_longitude_constant(&m) as u128;
        for _ in 0..20 {
            let eta = loop {
                let s = random_slope(&mut rng, 1000);
                if s != Slope::LONGITUDE {
                    break s;
                }
            };
            let det = determinant(&filling_presentation(&m, eta).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .unsigned_abs();
            let want = c * slope_distance(eta, Slope::LONGITUDE) as u128;
            check(det == want, || format!("{m}, slope {eta}: |det| {det} vs {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (data, slope) pairs"))
}

fn snf_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for i in 0..10_000 {
        let (rows, cols) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let entries: Vec<Vec<Int>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let a = IntMatrix::from_rows(&entries).unwrap();
        let s = smith_normal_form(&a).map_err(|e| format!("#{i}: {e}"))?;
        let lhs = s.u_cert.mul(&BigMatrix::from(&a)).mul(&s.v_cert);
        check(lhs == BigMatrix::from(&s.diagonal_matrix()), || format!("#{i}: U·A·V ≠ diag(d) for {a:?}"))?;
        for cert in [&s.u_cert, &s.v_cert] {
            let d = cert.determinant();
            check(d.abs().is_one(), || format!("#{i}: certificate determinant {d}"))?;
        }
        check(
            s.d.windows(2).all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0)) && s.d.iter().all(|&x| x >= 0),
            || format!("#{i}: chain broken {:?}", s.d),
        )?;
        let oracle = minor_gcds(&a).map_err(|e| e.to_string())?.quotients();
        check(oracle == s.d, || format!("#{i}: d {:?} vs minor gcds {oracle:?}", s.d))?;
    }
    Ok("10000 matrices".into())
}

fn goeritz_invariance() -> Outcome {
    let t = bundled_table();
    let mut diagrams = 0;
    let mut matrices = 0;
    for k in t.records.iter().filter(|k| crossing_number(&k.name).is_some_and(|c| c <= 9)) {
        let pd = k.pd.as_ref().ok_or(format!("{} has no diagram", k.name))?;
        let all = all_goeritz(pd).map_err(|e| format!("{}: {e}", k.name))?;
        let first = branched_homology(&all[0]).map_err(|e| e.to_string())?;
        for g in &all {
            let h = branched_homology(g).map_err(|e| e.to_string())?;
            check(h == first, || format!("{}: {h} vs {first}", k.name))?;
            let det = knot_determinant(g).map_err(|e| format!("{}: {e}", k.name))?;
            check(det == k.determinant, || format!("{}: det {det} vs table {}", k.name, k.determinant))?;
            matrices += 1;
        }
        diagrams += 1;
    }
    Ok(format!("{diagrams} diagrams, {matrices} Goeritz matrices"))
}

fn pretzel_family() -> Outcome {
    let out = run_cli(&["pretzel", "--det", "33"])?;
    let mut hits = Vec::new();
    for line in out.lines().filter(|l| l.starts_with("P(")) {
        let inner = &line[2..line.find(')').ok_or("malformed hit")?];
        let v: Vec<i64> = inner
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| format!("bad hit {line}")))
            .collect::<Result<_, _>>()?;
        hits.push((-v[0], v[1], v[2]));
    }
    check(hits == [(2, 1, 31), (4, 3, 21), (6, 5, 3)], || format!("hits {hits:?}"))?;
    for &(p, q, r) in &hits {
        let d = pretzel_diagram(-p, q, r).map_err(|e| e.to_string())?;
        let g = default_goeritz(&d).map_err(|e| e.to_string())?;
        let det = knot_determinant(&g).map_err(|e| e.to_string())?;
        check(det == 33, || format!("P(-{p},{q},{r}) diagram has determinant {det}"))?;
    }
    Ok("3 hits, diagrams have determinant 33".into())
}

fn slope_counting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut pairs = 0;
    while pairs < 100 {
        let (alpha, beta) = (random_slope(&mut rng, 12), random_slope(&mut rng, 12));
        if slope_distance(alpha, beta) != 2 {
            continue;
        }
        let got = common_distance_one_slopes(alpha, beta).map_err(|e| e.to_string())?;
        let mut brute = Vec::new();
        for a in 0..=50i64 {
            for b in -50..=50i64 {
                if gcd(a, b) != 1 || (a == 0 && b != 1) {
                    continue;
                }
                let s = Slope::new(a, b).unwrap();
                if slope_distance(alpha, s) == 1 && slope_distance(beta, s) == 1 {
                    brute.push(s);
                }
            }
        }
        brute.sort();
        check(brute.len() == 2 && got.to_vec() == brute, || format!("{alpha}, {beta}: {got:?} vs {brute:?}"))?;
        pairs += 1;
    }
    Ok("100 pairs".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 nine-crossing homology", nine_crossing_homology),
        ("2 ten-crossing homology and determinants", ten_crossing_homology),
        ("3 classification open lists", classification),
        ("4 square-free oracle", oracle),
        ("5 filling order identity", filling_order_identity),
        ("6 Smith normal form properties", snf_suite),
        ("7 Goeritz invariance", goeritz_invariance),
        ("8 pretzel family", pretzel_family),
        ("9 slope counting", slope_counting),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
