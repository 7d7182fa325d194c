//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails or overruns its time limit.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rgk::canon::{canonical_form, canonical_form_bounded};
use rgk::colorings::{necessity_coloring, verify_no_blue_target};
use rgk::embedding::{contains_multipartite, find_embedding, verify_embedding};
use rgk::goodness::{decide_goodness, host_template, snd, GoodnessOptions};
use rgk::graph::{complete, complete_multipartite, cycle, join, path, star};
use rgk::invariants::{burr_lower_bound, min_color_class};
use rgk::ramsey::{arrows, enumerate_graphs, is_critical, is_matching, ramsey_number, RamseyStatus};
use rgk::trees::enumerate_free_trees;
use rgk::{GoodnessProblem, Graph, HostFamily, NecessityParams, PartSizes, Verdict, MAX_ORDER};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let expected = [(1, 2), (3, 2), (5, 2), (7, 2), (2, 3), (6, 4), (60, 7)];
    for (alpha, want) in expected {
        let got = snd(alpha).map_err(|e| e.to_string())?;
        check(got == want, || format!("snd({alpha}) = {got}, expected {want}"))?;
    }
    Ok("snd(1,3,5,7)=2 snd(2)=3 snd(6)=4 snd(60)=7".into())
}

fn criterion_2() -> Outcome {
    let counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &want) in counts.iter().enumerate() {
        let n = i + 1;
        let set = enumerate_free_trees(n).map_err(|e| e.to_string())?;
        check(set.len() == want, || format!("n = {n}: {} trees, expected {want}", set.len()))?;
        if n <= 8 {
            let fast: HashSet<_> = set.trees.iter().map(|t| canonical_form(t).unwrap()).collect();
            check(fast.len() == set.len(), || format!("n = {n}: duplicate trees"))?;
            check(fast == common::naive_trees(n), || format!("n = {n}: differs from the brute-force set"))?;
        }
    }
    Ok("counts 1..10 match; n <= 8 equal to brute force set-for-set".into())
}

fn criterion_3() -> Outcome {
    let g = join(&path(6).unwrap(), &complete(1).unwrap()).unwrap();
    let trees = enumerate_free_trees(7).unwrap().trees;
    check(trees.len() == 11, || format!("{} trees on 7 vertices", trees.len()))?;
    for t in &trees {
        let host = host_template(7, 1, t).unwrap();
        let e = find_embedding(&g, &host).ok_or_else(|| format!("no embedding into {t} + 7K_1"))?;
        check(verify_embedding(&g, &host, &e).unwrap(), || format!("embedding into {t} fails to verify"))?;
    }
    let cherries = host_template(7, 1, &path(3).unwrap()).unwrap();
    check(find_embedding(&g, &cherries).is_none(), || "P_6+K_1 embedded into 7K_{1,2}+7K_1".into())?;
    Ok("11/11 tree hosts embed and re-verify; 7K_{1,2}+7K_1 has no embedding".into())
}

fn good(g: &Graph, alpha: u64) -> Result<bool, String> {
    let p = snd(alpha).unwrap();
    let prob = GoodnessProblem::new(g.clone(), alpha, p, HostFamily::K1).map_err(|e| e.to_string())?;
    let cert = decide_goodness(&prob, GoodnessOptions::default()).map_err(|e| e.to_string())?;
    check(cert.reverify(g).unwrap(), || format!("certificate for {g}, alpha = {alpha} does not re-verify"))?;
    Ok(cert.verdict == Verdict::Good)
}

fn criterion_4() -> Outcome {
    let mut cases = 0;
    for m in 0..=4 {
        let book = join(&complete(2).unwrap(), &Graph::empty(m).unwrap()).unwrap();
        for alpha in 1..=6 {
            check(good(&book, alpha)?, || format!("K_2+{m}K_1 not good at alpha = {alpha}"))?;
            cases += 1;
        }
    }
    for k in 1..=3 {
        for alpha in 1..=6 {
            check(good(&complete(k + 1).unwrap(), alpha)?, || format!("K_{} not good at alpha = {alpha}", k + 1))?;
            cases += 1;
        }
    }
    let (mut graphs, mut verdicts) = (0, [0, 0]);
    for v in 2..=6 {
        for g in enumerate_graphs(v).unwrap() {
            let profile = min_color_class(&g).unwrap();
            if profile.s != 1 || profile.chi < 2 {
                continue;
            }
            graphs += 1;
            let expected = common::matching_split_oracle(&g, profile.chi - 1);
            for alpha in [1, 3, 5, 7] {
                let got = good(&g, alpha)?;
                check(got == expected, || {
                    format!("{g} at alpha = {alpha}: verdict good = {got}, split oracle says {expected}")
                })?;
                verdicts[got as usize] += 1;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} cases; {graphs} graphs with s = 1 on 2..6 vertices agree with the split oracle ({} good, {} not good)",
        verdicts[1], verdicts[0]
    ))
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for alpha in 1..=3usize {
        let p = snd(alpha as u64).unwrap() as usize;
        for tree in enumerate_free_trees(p).unwrap().trees {
            for k in 1..=2 {
                for n in 1..=6 {
                    let params = NecessityParams::new(alpha, p, k, n, 1, tree.clone()).map_err(|e| e.to_string())?;
                    let c = necessity_coloring(&params).unwrap();
                    let label = format!("alpha = {alpha}, k = {k}, n = {n}, T = {tree}");
                    check(c.is_complementary(), || format!("{label}: colours not complementary"))?;
                    let expected = params.expected_red().unwrap();
                    let same = canonical_form_bounded(c.red(), MAX_ORDER).unwrap()
                        == canonical_form_bounded(&expected, MAX_ORDER).unwrap();
                    check(same, || format!("{label}: red graph has the wrong shape"))?;
                    let report = verify_no_blue_target(&c, &params.target_parts()).unwrap();
                    check(report.absent, || format!("{label}: blue target found"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} colourings complementary, red side as predicted, no blue target"))
}

fn criterion_6() -> Outcome {
    let k3 = complete(3).unwrap();
    let mut pins = vec![
        ("r(K3,K3)".to_string(), k3.clone(), k3.clone(), 6),
        ("r(P3,K3)".to_string(), path(3).unwrap(), k3.clone(), 5),
        ("r(P4,K3)".to_string(), path(4).unwrap(), k3.clone(), 7),
    ];
    let samples = [
        ("P4", path(4).unwrap()),
        ("K13", star(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("K4", complete(4).unwrap()),
        ("P6", path(6).unwrap()),
    ];
    for (name, h) in samples {
        let v = h.order();
        pins.push((format!("r(K2,{name})"), complete(2).unwrap(), h, v));
    }
    let mut shown = Vec::new();
    for (name, g, h, want) in pins {
        let r = ramsey_number(&g, &h, want).map_err(|e| e.to_string())?;
        check(r.value == Some(want) && r.status == RamseyStatus::Exact, || {
            format!("{name} = {:?}, expected {want}", r.value)
        })?;
        check(r.lower_witness.order() == want - 1 && is_critical(&r.lower_witness, &g, &h), || {
            format!("{name}: witness on {} vertices is not critical", r.lower_witness.order())
        })?;
        // Burr's bound in both orientations, where it applies (v(H) >= s(G))
        let burr = [burr_lower_bound(&h, g.order()), burr_lower_bound(&g, h.order())]
            .into_iter()
            .filter_map(Result::ok)
            .max()
            .unwrap_or(0);
        check(burr <= want, || format!("{name} = {want} is below Burr's bound {burr}"))?;
        if g.is_tree() && h == k3 {
            let chvatal = 2 * (g.order() - 1) + 1;
            check(want == chvatal, || format!("{name} differs from (m-1)(n-1)+1 = {chvatal}"))?;
        }
        shown.push(format!("{name}={want}"));
    }
    Ok(shown.join(" "))
}

fn criterion_7() -> Outcome {
    let g = path(3).unwrap();
    let h = join(&complete_multipartite(&PartSizes::repeated(2, 3).unwrap()).unwrap(), &complete(1).unwrap()).unwrap();
    check(enumerate_graphs(7).unwrap().len() == 1044, || "class count on 7 vertices".into())?;
    let seven = arrows(7, &g, &h).unwrap();
    check(seven.arrows, || "K_7 does not arrow".into())?;
    let six = arrows(6, &g, &h).unwrap();
    let c = six.counterexample.ok_or("K_6 arrows")?;
    check(is_critical(&c, &g, &h), || "counterexample is not critical".into())?;
    check(is_matching(c.red()), || format!("red graph {} is not a matching", c.red()))?;
    let (p, alpha, n) = (3, 2, 1);
    check(p * alpha + n == 7, || "value differs from pα+n".into())?;
    Ok(format!("r(K_{{1,2}}, K_3(2)+K_1) = 7 over 1044 classes; K_6 red matching {} avoids both", c.red()))
}

fn random_parts(rng: &mut StdRng, total: usize) -> PartSizes {
    let mut parts = Vec::new();
    let mut left = total;
    while left > 0 {
        let p = rng.gen_range(1..=left.min(4));
        parts.push(p);
        left -= p;
    }
    PartSizes::new(parts).unwrap()
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut found = 0;
    for i in 0..200 {
        let n = rng.gen_range(2..=10);
        let density = rng.gen_range(0.3..0.95);
        let host = common::random_graph(&mut rng, n, density);
        let parts = random_parts(&mut rng, n);
        let fast = contains_multipartite(&host, &parts).unwrap();
        let generic = find_embedding(&complete_multipartite(&parts).unwrap(), &host);
        check(fast.is_some() == generic.is_some(), || format!("multipartite instance {i}: {host} parts {parts:?}"))?;
        if let Some(a) = fast {
            check(a.is_valid_in(&host), || format!("instance {i}: invalid part assignment"))?;
            found += 1;
        }
    }
    let mut embedded = 0;
    for i in 0..200 {
        let pn = rng.gen_range(1..=5);
        let hn = rng.gen_range(pn..=8);
        let pattern = common::random_graph(&mut rng, pn, 0.5);
        let density = rng.gen_range(0.2..0.9);
        let host = common::random_graph(&mut rng, hn, density);
        let fast = find_embedding(&pattern, &host);
        check(fast.is_some() == common::naive_embeds(&pattern, &host), || {
            format!("embedding instance {i}: {pattern} into {host}")
        })?;
        if let Some(e) = fast {
            check(verify_embedding(&pattern, &host, &e).unwrap(), || format!("instance {i}: bad witness"))?;
            embedded += 1;
        }
    }
    Ok(format!("200/200 multipartite ({found} present), 200/200 vs brute force ({embedded} embeddable)"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("snd fixtures", criterion_1, Duration::from_millis(1)),
        ("tree enumeration", criterion_2, Duration::from_secs(60)),
        ("remark reproduction", criterion_3, Duration::from_secs(10)),
        ("goodness consistency", criterion_4, Duration::from_secs(600)),
        ("necessity colourings", criterion_5, Duration::from_secs(300)),
        ("oracle exactness", criterion_6, Duration::from_secs(300)),
        ("formula instance", criterion_7, Duration::from_secs(120)),
        ("search equivalence", criterion_8, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > limit => ("FAIL", format!("took {elapsed:.2?}, limit {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {} [{status}] {name} ({elapsed:.2?} / {limit:?}): {detail}", i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
