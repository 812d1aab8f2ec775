//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use qmcbn::bench::{default_direction_numbers, fit_alpha, run_experiment, Experiment, Method};
use qmcbn::bundled;
use qmcbn::dirnums::{format_candidate_log, format_direction_numbers};
use qmcbn::formats::{parse_evidence, parse_icpt, parse_network};
use qmcbn_core::bn::{brute_force_marginals, variable_elimination, BayesNet, Evidence, NodeSpec};
use qmcbn_core::discrepancy::{
    cell_uniformity, search_direction_numbers, star_discrepancy_exact, PointSet2D, UniformitySearchConfig,
};
use qmcbn_core::lds::{
    expand_direction_numbers, faure_point, halton_point, nth_prime, sobol_direct_point, DirectionTable, FaureParams,
    SobolDimensionParams, SobolStream, FAURE_DEFAULT_MAX_POINTS,
};
use qmcbn_core::sampling::{importance_checkpoints, importance_estimate, likelihood_weighting_isf, rmse_metric, RandomStream};
use qmcbn_core::{NumberStream, UnitPoint};
use rand::{Rng, SeedableRng};
use rand_distr::{Distribution, Normal};
use rand_xoshiro::SplitMix64;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

fn below(rng: &mut SplitMix64, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// Mirrored base-b digits as one exact fraction.
fn radical_oracle(mut n: u64, b: u64) -> f64 {
    let (mut num, mut den) = (0u128, 1u128);
    while n > 0 {
        num = num * u128::from(b) + u128::from(n % b);
        den *= u128::from(b);
        n /= b;
    }
    num as f64 / den as f64
}

fn criterion_1() -> Check {
    for n in 1..=1024u64 {
        let p = halton_point(n, 8).map_err(|e| e.to_string())?;
        for j in 0..8 {
            let b = u64::from(nth_prime(j + 1).unwrap());
            ensure(p[j] == radical_oracle(n, b), format!("halton n={n} dim={}", j + 1))?;
        }
    }
    let params = default_direction_numbers();
    let table = DirectionTable::new(&params[..16]).unwrap();
    let mut stream = SobolStream::new(&table, 16).unwrap();
    let key = |p: &UnitPoint| p.coords().iter().map(|x| x.to_bits()).collect::<Vec<u64>>();
    let gray: Vec<Vec<u64>> = (0..1 << 12).map(|_| key(&stream.next_point().unwrap())).collect();
    let origin = vec![0u64; 16];
    for k in 0..=12u32 {
        let len = 1usize << k;
        // the stream starts at index 1; its first 2^k - 1 points plus the origin
        // are indices 0 .. 2^k - 1
        let mut emitted: BTreeSet<Vec<u64>> = gray[..len - 1].iter().cloned().collect();
        emitted.insert(origin.clone());
        let mut direct: BTreeSet<Vec<u64>> =
            (1..len as u64).map(|n| key(&sobol_direct_point(n, &table, 16).unwrap())).collect();
        direct.insert(origin.clone());
        ensure(emitted == direct, format!("sobol gray/direct prefix 2^{k}"))?;
    }
    let mut faure_checked = 0;
    for d in 1..=16usize {
        let fp = FaureParams::new(d, FAURE_DEFAULT_MAX_POINTS).unwrap();
        let p = fp.prime();
        for n in 0..p.pow(3) {
            let x = faure_point(n, &fp, d).unwrap();
            ensure(x[0] == radical_oracle(n, p), format!("faure d={d} n={n}"))?;
            faure_checked += 1;
        }
    }
    Ok(format!("halton 8192 coords, sobol 13 prefixes d=16, faure {faure_checked} points exact"))
}

fn grid_oracle(points: &[UnitPoint], g: usize) -> f64 {
    let n = points.len() as f64;
    let cell = |x: f64| ((x * g as f64) as usize).min(g - 1);
    let d = points[0].dim();
    let gy = if d == 1 { 1 } else { g };
    let mut prefix = vec![0u32; (g + 1) * (gy + 1)];
    for p in points {
        let y = if d == 1 { 0 } else { cell(p[1]) };
        prefix[(cell(p[0]) + 1) * (gy + 1) + y + 1] += 1;
    }
    for i in 1..=g {
        for j in 1..=gy {
            prefix[i * (gy + 1) + j] +=
                prefix[(i - 1) * (gy + 1) + j] + prefix[i * (gy + 1) + j - 1] - prefix[(i - 1) * (gy + 1) + j - 1];
        }
    }
    let mut best: f64 = 0.0;
    for i in 0..=g {
        for j in (if d == 1 { gy } else { 0 })..=gy {
            let vol = (i * j) as f64 / (g * gy) as f64;
            best = best.max((f64::from(prefix[i * (gy + 1) + j]) / n - vol).abs());
        }
    }
    best
}

fn count_oracle(points: &[(f64, f64)], m: usize) -> f64 {
    let edge = |a: usize| a as f64 / m as f64;
    let ideal = points.len() as f64 / (m * m) as f64;
    let mut total = 0.0;
    for a in 0..m {
        for b in 0..m {
            let c = points
                .iter()
                .filter(|&&(x, y)| {
                    x >= edge(a) && (a + 1 == m || x < edge(a + 1)) && y >= edge(b) && (b + 1 == m || y < edge(b + 1))
                })
                .count();
            total += (c as f64 - ideal).abs();
        }
    }
    total
}

fn criterion_2() -> Check {
    let mut rng = SplitMix64::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for case in 0..50 {
        let n = 1 + below(&mut rng, 64);
        let d = 1 + case % 2;
        let pts: Vec<UnitPoint> =
            (0..n).map(|_| UnitPoint::new((0..d).map(|_| unit(&mut rng)).collect()).unwrap()).collect();
        let exact = star_discrepancy_exact(&pts).map_err(|e| e.to_string())?;
        let oracle = grid_oracle(&pts, 2000);
        let diff = (exact - oracle).abs();
        worst = worst.max(diff);
        ensure(diff <= 1.0 / 2000.0 + 1.0 / n as f64, format!("star set {case}: exact {exact} oracle {oracle}"))?;
    }
    for case in 0..50 {
        let n = 1 + below(&mut rng, 500);
        let m = 1 + below(&mut rng, 16);
        let pts: Vec<(f64, f64)> = (0..n).map(|_| (unit(&mut rng), unit(&mut rng))).collect();
        let got = cell_uniformity(&PointSet2D::new(pts.clone()).unwrap(), m).unwrap();
        ensure(got == count_oracle(&pts, m), format!("cell set {case}: {got}"))?;
    }
    Ok(format!("star max |diff| {worst:.2e}; cell uniformity exact on 50 sets"))
}

fn gray_points(params: &SobolDimensionParams, n: usize) -> Vec<f64> {
    let v = expand_direction_numbers(params, 32).unwrap();
    (1..=n as u64)
        .map(|i| {
            let g = i ^ (i >> 1);
            let x = (0..32).filter(|b| g >> b & 1 == 1).fold(0u32, |acc, b| acc ^ v[b]);
            f64::from(x) / 4_294_967_296.0
        })
        .collect()
}

fn fast_uniformity(xs: &[f64], ys: &[f64], m: usize) -> f64 {
    let mut counts = vec![0u32; m * m];
    for (x, y) in xs.iter().zip(ys) {
        counts[(x * m as f64) as usize * m + (y * m as f64) as usize] += 1;
    }
    let ideal = xs.len() as f64 / (m * m) as f64;
    counts.iter().map(|&c| (f64::from(c) - ideal).abs()).sum()
}

fn criterion_3() -> Check {
    let cfg = UniformitySearchConfig { dimensions: 16, random_times: 32, points: 1024, grid: 32, window: 8, seed: 2001 };
    let run = || -> Result<String, String> {
        let out = search_direction_numbers(&cfg).map_err(|e| e.to_string())?;
        Ok(format_direction_numbers(&out.params, "acceptance") + &format_candidate_log(&out.log))
    };
    let (a, b) = (run()?, run()?);
    ensure(a == b, "two runs differ".into())?;

    let out = search_direction_numbers(&cfg).unwrap();
    let kept: Vec<Vec<f64>> = out.params.iter().map(|p| gray_points(p, cfg.points)).collect();
    for dim in 1..=cfg.dimensions {
        let recs: Vec<_> = out.log.iter().filter(|r| r.dimension == dim).collect();
        ensure(recs.len() == cfg.random_times, format!("dim {dim}: {} log rows", recs.len()))?;
        let lo = dim.saturating_sub(cfg.window).max(1);
        for r in &recs {
            let p = SobolDimensionParams::for_dimension(dim, r.initial.clone()).map_err(|e| e.to_string())?;
            let xs = gray_points(&p, cfg.points);
            let score: f64 = (lo..dim).map(|k| fast_uniformity(&kept[k - 1], &xs, cfg.grid)).sum();
            ensure(score == r.error_sum, format!("dim {dim} candidate {}: logged {} rescored {score}", r.candidate, r.error_sum))?;
        }
        let min = recs.iter().map(|r| r.error_sum).fold(f64::INFINITY, f64::min);
        let first_min = recs.iter().find(|r| r.error_sum == min).unwrap();
        ensure(out.params[dim - 1].initial() == &first_min.initial[..], format!("dim {dim}: kept candidate is not the minimum"))?;
    }
    Ok(format!("{} candidates rescored; kept = first minimum in all 16 dims; byte-identical reruns", out.log.len()))
}

fn random_net(seed: u64) -> BayesNet {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let n = 1 + below(&mut rng, 12);
    let cards: Vec<usize> = (0..n).map(|_| 2 + below(&mut rng, 2)).collect();
    let mut specs: Vec<NodeSpec> = (0..n)
        .map(|i| {
            let mut parents: Vec<usize> = (0..i).filter(|_| below(&mut rng, 3) == 0).collect();
            while parents.len() > 3 {
                parents.remove(below(&mut rng, parents.len()));
            }
            let rows: usize = parents.iter().map(|&p| cards[p]).product();
            let cpt = (0..rows)
                .map(|_| {
                    let mut row: Vec<f64> =
                        (0..cards[i]).map(|_| if below(&mut rng, 10) == 0 { 0.0 } else { unit(&mut rng) + 0.01 }).collect();
                    if row.iter().all(|&x| x == 0.0) {
                        row[0] = 1.0;
                    }
                    let s: f64 = row.iter().sum();
                    row.into_iter().map(|x| x / s).collect()
                })
                .collect();
            NodeSpec {
                id: format!("v{i}"),
                states: (0..cards[i]).map(|s| format!("s{s}")).collect(),
                parents: parents.iter().map(|p| format!("v{p}")).collect(),
                cpt,
            }
        })
        .collect();
    for i in (1..specs.len()).rev() {
        specs.swap(i, below(&mut rng, i + 1));
    }
    BayesNet::new(format!("dag{seed}"), specs).unwrap()
}

fn random_evidence(net: &BayesNet, seed: u64) -> Evidence {
    let mut rng = SplitMix64::seed_from_u64(!seed);
    let mut a = vec![0usize; net.len()];
    for &i in net.topological_order() {
        let row = net.node(i).row(net.parent_config(i, &a));
        a[i] = qmcbn_core::sampling::draw_node_state(row, unit(&mut rng)).unwrap();
    }
    let mut ev = Evidence::new();
    for i in 0..net.len() {
        if below(&mut rng, 3) == 0 && ev.len() + 1 < net.len() {
            ev.observe_index(net, i, a[i]).unwrap();
        }
    }
    ev
}

fn criterion_4() -> Check {
    let mut worst: f64 = 0.0;
    for seed in 0..100 {
        let net = random_net(seed);
        let ev = random_evidence(&net, seed);
        let ve = variable_elimination(&net, &ev).map_err(|e| format!("dag {seed}: {e}"))?;
        let bf = brute_force_marginals(&net, &ev).map_err(|e| format!("dag {seed}: {e}"))?;
        let d = ve.max_abs_diff(&bf).unwrap();
        let pe = (ve.prob_evidence().unwrap() - bf.prob_evidence().unwrap()).abs();
        worst = worst.max(d).max(pe);
        ensure(d <= 1e-10 && pe <= 1e-10, format!("dag {seed}: marginal diff {d:e}, Pr(e) diff {pe:e}"))?;
    }
    Ok(format!("100 DAGs, max diff {worst:.2e}"))
}

fn asia_report() -> qmcbn::bench::ConvergenceReport {
    let mut exp = Experiment::new(parse_network(bundled::ASIA).unwrap(), Evidence::new());
    exp.seed = 1;
    run_experiment(&exp).unwrap()
}

fn criterion_5(report: &qmcbn::bench::ConvergenceReport) -> Check {
    let alpha = |m| report.summary_for(m).and_then(|s| s.fit).map(|f| f.alpha).unwrap_or(f64::NAN);
    let (mc, sobol, halton, faure) = (alpha(Method::Mc), alpha(Method::Sobol), alpha(Method::Halton), alpha(Method::Faure));
    let line = format!("alpha mc {mc:.3} sobol {sobol:.3} halton {halton:.3} faure {faure:.3}");
    ensure((0.38..=0.62).contains(&mc) && sobol >= 0.70 && halton >= 0.60 && faure >= 0.60, line.clone())?;
    Ok(line)
}

fn criterion_6(report: &qmcbn::bench::ConvergenceReport) -> Check {
    let at = |m: Method| report.summary_for(m).unwrap().points.iter().find(|p| p.0 == 8000).map(|p| p.1).unwrap();
    let (mc, sobol) = (at(Method::Mc), at(Method::Sobol));
    let mc_rows = report.rows.iter().filter(|r| r.method == Method::Mc && r.samples == 8000).count();
    ensure(mc_rows == 10, format!("{mc_rows} MC runs at N=8000"))?;
    let line = format!("N=8000: mc mean {mc:.3e}, sobol {sobol:.3e}, ratio {:.1}", mc / sobol);
    ensure(sobol <= mc / 5.0, line.clone())?;
    Ok(line)
}

fn criterion_7() -> Check {
    let net = parse_network(bundled::TREE7).unwrap();
    let ev = parse_evidence(bundled::TREE7_EVIDENCE, &net).unwrap();
    let exact = variable_elimination(&net, &ev).unwrap();
    let pe = exact.prob_evidence().unwrap();
    ensure((pe - 0.055864875).abs() < 1e-15, format!("exact Pr(e) {pe}"))?;
    let dim = net.len() - ev.len();
    let lw = likelihood_weighting_isf(&net, &ev);
    let runs = 200;
    let est: Vec<f64> = (0..runs)
        .map(|r| importance_estimate(&net, &ev, &lw, &mut RandomStream::new(dim, 7000 + r), 1000).unwrap().prob_evidence_estimate)
        .collect();
    let mean = est.iter().sum::<f64>() / runs as f64;
    let sd = (est.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (runs - 1) as f64).sqrt();
    let se = sd / (runs as f64).sqrt();
    let z = (mean - pe) / se;
    let lw_line = format!("LW mean Pr(e) {mean:.6} vs {pe} ({z:+.2} SE)");
    ensure(z.abs() <= 3.0, lw_line.clone())?;

    let isf = parse_icpt(bundled::TREE7_POSTERIOR_ICPT, &net, &ev).map_err(|e| e.to_string())?;
    let mut stream = RandomStream::new(dim, 77);
    let checkpoints: Vec<u64> = (1..=10).collect();
    let res = importance_checkpoints(&net, &ev, &isf, &mut stream, &checkpoints).map_err(|e| e.to_string())?;
    let mut prev = 0.0;
    let mut weights = Vec::new();
    for r in &res {
        weights.push(r.weight_sum - prev);
        prev = r.weight_sum;
    }
    let spread = weights.iter().map(|w| (w - weights[0]).abs()).fold(0.0, f64::max);
    let pe10 = (res[9].prob_evidence_estimate - pe).abs();
    ensure(spread <= 1e-12, format!("{lw_line}; ICPT weight spread {spread:e}"))?;
    let marg = res[9].marginals.max_abs_diff(&exact).unwrap();
    let rmse = rmse_metric(&res[9].marginals, &exact, &ev).unwrap();
    let icpt_line = format!(
        "ICPT N=10: weight spread {spread:.1e}, |Pr(e) est - exact| {pe10:.1e}, max marginal error {marg:.3} (rmse {rmse:.3})"
    );
    ensure(marg <= 1e-9, format!("{lw_line}; {icpt_line}"))?;
    Ok(format!("{lw_line}; {icpt_line}"))
}

fn criterion_8() -> Check {
    let sizes: Vec<u64> = (0..11).map(|k| 250u64 << k).collect();
    let mut rng = SplitMix64::seed_from_u64(8);
    let noise = Normal::new(0.0, 0.01).unwrap();
    let mut worst_exact: f64 = 0.0;
    let mut worst_noisy: f64 = 0.0;
    for alpha in [0.5, 0.61, 0.9] {
        let clean: Vec<(u64, f64)> = sizes.iter().map(|&n| (n, 2.5 * (n as f64).powf(-alpha))).collect();
        let f = fit_alpha(&clean).map_err(|e| e.to_string())?;
        worst_exact = worst_exact.max((f.alpha - alpha).abs());
        let noisy: Vec<(u64, f64)> =
            clean.iter().map(|&(n, r)| (n, r * (1.0 + noise.sample(&mut rng)))).collect();
        let g = fit_alpha(&noisy).map_err(|e| e.to_string())?;
        worst_noisy = worst_noisy.max((g.alpha - alpha).abs());
    }
    let line = format!("noise-free max error {worst_exact:.1e}, 1% noise max error {worst_noisy:.4}");
    ensure(worst_exact <= 1e-12 && worst_noisy <= 0.02, line.clone())?;
    Ok(line)
}

fn criterion_9() -> Check {
    let data = |f: &str| format!("{}/data/{f}", env!("CARGO_MANIFEST_DIR"));
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qmcbn"))
            .args(["bench", "--network", &data("asia.json"), "--evidence", &data("asia_evidence.json"), "--seed", "9"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), String::from_utf8_lossy(&a.stderr).into_owned())?;
    ensure(a.stdout == b.stdout, "CSV differs between runs".into())?;
    Ok(format!("{} bytes identical across two runs", a.stdout.len()))
}

fn main() {
    let names = [
        "1 generator correctness",
        "2 discrepancy oracles",
        "3 direction-number search",
        "4 exact-inference oracle",
        "5 convergence rates (ASIA)",
        "6 improvement at N=8000 (ASIA)",
        "7 evidential estimation",
        "8 regression fitter",
        "9 end-to-end determinism",
    ];
    let mut asia = None;
    let mut failed = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let start = Instant::now();
        let result = match i + 1 {
            1 => criterion_1(),
            2 => criterion_2(),
            3 => criterion_3(),
            4 => criterion_4(),
            5 => criterion_5(asia.get_or_insert_with(asia_report)),
            6 => criterion_6(asia.get_or_insert_with(asia_report)),
            7 => criterion_7(),
            8 => criterion_8(),
            _ => criterion_9(),
        };
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                println!("FAIL criterion {name}: {detail} [{secs:.1}s]");
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: all 9 criteria pass");
}
