//! Acceptance checks. Each criterion prints one `PASS` or `FAIL` line with its
//! running time and limit; the process fails if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use gammagraphs::canon::are_isomorphic;
use gammagraphs::classify::{classify, enumerate_connected_graphs, ClassifyOptions, Counts, Status};
use gammagraphs::clutter::{blocker, validate_clutter, Clutter};
use gammagraphs::domination::min_dominating_sets;
use gammagraphs::family::{fan, wheel};
use gammagraphs::gamma_graph::build_gamma_graph;
use gammagraphs::labelling::{
    find_labelling, middle_label_candidates, triangle_form, wheel_labelling, SearchBudget,
    SearchOutcome, TriangleForm,
};
use gammagraphs::realizer::{construction_size, hhl_size, realize};
use gammagraphs::{fixtures, is_minimally_unlabellable, Graph, Labelling};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(g: &Graph, sets: &[Vec<usize>]) -> Vec<String> {
    sets.iter().map(|s| s.iter().map(|&v| g.name(v)).collect()).collect()
}

fn example_graph() -> Check {
    let g = fixtures::domination_example();
    let r1 = min_dominating_sets(&g, 1).map_err(|e| e.to_string())?;
    ensure(r1.gamma == 2, || format!("gamma_1 = {}", r1.gamma))?;
    let mut got = names(&g, &r1.min_sets);
    got.sort();
    ensure(got == ["15", "25", "36", "46", "56"], || format!("distance-1 sets {got:?}"))?;
    let gg1 = build_gamma_graph(&g, 1).map_err(|e| e.to_string())?;
    ensure(gg1.graph.same_labelled_graph(&fixtures::domination_example_gamma1()), || {
        format!("distance-1 gamma graph {:?}", gg1.graph)
    })?;
    let r2 = min_dominating_sets(&g, 2).map_err(|e| e.to_string())?;
    ensure(r2.gamma == 1, || format!("gamma_2 = {}", r2.gamma))?;
    let gg2 = build_gamma_graph(&g, 2).map_err(|e| e.to_string())?;
    ensure(gg2.graph.names() == ["2", "3", "5", "6", "7"] && gg2.graph.edge_count() == 10, || {
        format!("distance-2 gamma graph {:?}", gg2.graph)
    })?;
    Ok("gamma_1=2 with 5 sets, gamma_2=1 with K5".into())
}

fn roundtrip(d_family: &Clutter, d: u32) -> Result<(), String> {
    let r = realize(d_family, d).map_err(|e| e.to_string())?;
    let got = min_dominating_sets(&r.graph, d).map_err(|e| e.to_string())?;
    let mut sets: Vec<Vec<u32>> = Vec::new();
    for s in &got.min_sets {
        if s.iter().any(|&v| v >= r.core_size) {
            return Err(format!("{:?} d={d}: gadget vertex in a minimum dominating set", d_family.members()));
        }
        let mut m: Vec<u32> = s.iter().map(|&v| r.symbols[v]).collect();
        m.sort();
        sets.push(m);
    }
    sets.sort();
    let mut want = d_family.members();
    want.sort();
    ensure(sets == want, || format!("{want:?} d={d}: realized {sets:?}"))
}

fn realizer_roundtrip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut random = 0;
    while random < 250 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=n.min(3));
        let d = rng.gen_range(1..=3);
        let pool = common::k_subset_masks(n, k);
        let chosen: Vec<Vec<u32>> = pool
            .iter()
            .filter(|_| rng.gen_bool(0.4))
            .map(|&m| (0..n as u32).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        if chosen.is_empty() {
            continue;
        }
        roundtrip(&validate_clutter(n, &chosen).unwrap(), d)?;
        random += 1;
    }
    let mut exhaustive = 0;
    for k in 1..=2 {
        let pool = common::k_subset_masks(4, k);
        for pick in 1u32..(1 << pool.len()) {
            let sets: Vec<Vec<u32>> = pool
                .iter()
                .enumerate()
                .filter(|&(i, _)| pick >> i & 1 == 1)
                .map(|(_, &m)| (0..4u32).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
                .collect();
            let c = validate_clutter(4, &sets).unwrap();
            for d in 1..=3 {
                roundtrip(&c, d)?;
                exhaustive += 1;
            }
        }
    }
    Ok(format!("{random} random and {exhaustive} exhaustive (family, d) pairs"))
}

fn size_table() -> Check {
    let small = fixtures::small_family();
    let large = fixtures::larger_family();
    let got = (
        construction_size(&small, 3).unwrap(),
        construction_size(&small, 1).unwrap(),
        construction_size(&large, 1).unwrap(),
        hhl_size(&small).unwrap(),
        hhl_size(&large).unwrap(),
    );
    let want = ((22, 26), (10, 14), (28, 68), (36, 62), (613, 2728));
    ensure(got == want, || format!("{got:?}"))?;
    let built = realize(&small, 3).unwrap();
    ensure((built.graph.vertex_count(), built.graph.edge_count()) == (22, 26), || "built graph size".into())?;
    Ok(format!("{got:?}"))
}

fn blocker_involution() -> Check {
    let mut exhaustive = 0;
    for n in 0..=4usize {
        let subsets = 1u32 << n;
        for fam in 1u32..(1 << subsets) {
            let masks: Vec<u32> = (0..subsets).filter(|s| fam >> s & 1 == 1).collect();
            if masks == [0] {
                continue;
            }
            let antichain = masks.iter().all(|&a| masks.iter().all(|&b| a == b || a & b != a));
            if !antichain {
                continue;
            }
            let sets: Vec<Vec<u32>> = masks
                .iter()
                .map(|&m| (0..n as u32).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
                .collect();
            let c = validate_clutter(n, &sets).unwrap();
            let bb = blocker(&blocker(&c).unwrap()).unwrap();
            ensure(bb == c, || format!("b(b(C)) != C for {:?}", c.members()))?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xb10c);
    let mut random = 0;
    while random < 1000 {
        let n = rng.gen_range(1..=10);
        let count = rng.gen_range(1..=8);
        let sets: Vec<Vec<u32>> = (0..count)
            .map(|_| (1..=n as u32).filter(|_| rng.gen_bool(0.4)).collect())
            .filter(|s: &Vec<u32>| !s.is_empty())
            .collect();
        if sets.is_empty() {
            continue;
        }
        // keep the inclusion-minimal sets so the family is a clutter
        let minimal: BTreeSet<Vec<u32>> = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t != *s && t.iter().all(|x| s.contains(x))))
            .cloned()
            .collect();
        let c = validate_clutter(n, &minimal.into_iter().collect::<Vec<_>>()).unwrap();
        let bb = blocker(&blocker(&c).unwrap()).unwrap();
        ensure(bb == c, || format!("b(b(C)) != C for {:?}", c.members()))?;
        random += 1;
    }
    Ok(format!("{exhaustive} exhaustive and {random} random clutters"))
}

fn minimal_graphs_match(report: &gammagraphs::ClassificationReport, list: &[Graph]) -> Result<(), String> {
    let minimal: Vec<&Graph> = report
        .entries
        .iter()
        .filter(|e| e.verdict.status == Status::MinimallyUnlabellable)
        .map(|e| &e.graph)
        .collect();
    ensure(minimal.len() == list.len(), || format!("{} minimal graphs", minimal.len()))?;
    for want in list {
        let hits = minimal.iter().filter(|g| are_isomorphic(g, want).unwrap()).count();
        ensure(hits == 1, || format!("listed graph {want:?} matched {hits} minimal graphs"))?;
    }
    Ok(())
}

fn classify_orders(orders: &[usize]) -> gammagraphs::ClassificationReport {
    let graphs: Vec<Graph> = orders.iter().flat_map(|&n| enumerate_connected_graphs(n).unwrap()).collect();
    let options = ClassifyOptions {
        k_max: Some(6),
        ..Default::default()
    };
    classify(&graphs, options, None).unwrap()
}

fn counts(l: usize, m: usize, nm: usize) -> Counts {
    Counts {
        labellable: l,
        minimally_unlabellable: m,
        unlabellable_nonminimal: nm,
        undecided: 0,
    }
}

fn up_to_five() -> Check {
    let r = classify_orders(&[1, 2, 3, 4, 5]);
    ensure(r.entries.len() == 31, || format!("{} graphs", r.entries.len()))?;
    ensure(r.counts == counts(27, 4, 0), || format!("{:?}", r.counts))?;
    minimal_graphs_match(&r, &fixtures::five_vertex_minimal())?;
    check_labellings(&r)?;
    Ok("31 graphs: 27 labellable, 4 minimal, 0 nonminimal".into())
}

fn six_vertices() -> Check {
    let r = classify_orders(&[6]);
    ensure(r.entries.len() == 112, || format!("{} graphs", r.entries.len()))?;
    ensure(r.counts == counts(69, 4, 39), || format!("{:?}", r.counts))?;
    minimal_graphs_match(&r, &fixtures::six_vertex_minimal())?;
    check_labellings(&r)?;
    Ok("112 graphs: 69 labellable, 4 minimal, 39 nonminimal".into())
}

fn check_labellings(r: &gammagraphs::ClassificationReport) -> Result<(), String> {
    for e in &r.entries {
        if let Some(l) = &e.verdict.labelling {
            ensure(l.check(&e.graph).is_ok(), || format!("invalid labelling for {}", e.graph6))?;
        }
    }
    Ok(())
}

fn families() -> Check {
    let opts = ClassifyOptions::default();
    let status = |g: &Graph| is_minimally_unlabellable(g, opts).unwrap().status;
    for n in [4, 5, 7, 9, 11, 13] {
        let s = status(&wheel(n).unwrap());
        ensure(s == Status::Labellable, || format!("W_{n}: {s:?}"))?;
    }
    for n in [6, 8, 10, 12] {
        let s = status(&wheel(n).unwrap());
        ensure(s == Status::MinimallyUnlabellable, || format!("W_{n}: {s:?}"))?;
    }
    let mut labellable = vec![(2, 2), (2, 3)];
    labellable.extend((1..=6).map(|m| (m, 1)));
    labellable.extend((1..=6).map(|n| (1, n)));
    for (m, n) in labellable {
        let s = status(&fan(m, n).unwrap());
        ensure(s == Status::Labellable, || format!("F_{{{m},{n}}}: {s:?}"))?;
    }
    let s = status(&fan(3, 2).unwrap());
    ensure(s == Status::MinimallyUnlabellable, || format!("F_{{3,2}}: {s:?}"))?;
    for (m, n) in [(2, 4), (4, 2)] {
        let s = status(&fan(m, n).unwrap());
        ensure(s == Status::UnlabellableNonminimal, || format!("F_{{{m},{n}}}: {s:?}"))?;
    }
    let f24 = fan(2, 4).unwrap();
    let v = is_minimally_unlabellable(&f24, opts).unwrap();
    let witness = f24.induced_subgraph(v.witness.as_ref().unwrap()).unwrap();
    ensure(are_isomorphic(&witness, &fixtures::five_vertex_minimal()[2]).unwrap(), || {
        format!("F_{{2,4}} witness {witness:?}")
    })?;
    let w9 = wheel_labelling(9).unwrap();
    let printed = ["2345", "2346", "1346", "1347", "1247", "1248", "1238", "1235", "1234"];
    let got: Vec<String> = w9.labels().iter().map(|l| l.iter().map(|s| s.to_string()).collect()).collect();
    ensure(got == printed, || format!("wheel labels {got:?}"))?;
    ensure(w9.check(&wheel(9).unwrap()).is_ok(), || "wheel labelling invalid".into())?;
    Ok("wheels 4..13 and fans as expected; W_9 labels reproduced".into())
}

fn seven_vertex_fixtures() -> Check {
    let opts = ClassifyOptions::default();
    for (name, (g, l)) in [
        ("first hexagon graph", fixtures::seven_vertex_labellable_a()),
        ("second hexagon graph", fixtures::seven_vertex_labellable_b()),
    ] {
        ensure(l.check(&g).is_ok(), || format!("{name}: given labelling invalid"))?;
        let s = is_minimally_unlabellable(&g, opts).unwrap().status;
        ensure(s == Status::Labellable, || format!("{name}: {s:?}"))?;
    }
    let g = fixtures::seven_vertex_minimal();
    let out = find_labelling(&g, SearchBudget::new(7, SearchBudget::DEFAULT_NODE_LIMIT).unwrap()).unwrap();
    ensure(out == SearchOutcome::AbsentUpTo { k_max: 7 }, || format!("search: {out:?}"))?;
    for v in 0..7 {
        let h = g.delete_vertex(v).unwrap();
        let found = matches!(
            find_labelling(&h, SearchBudget::for_graph(&h)).unwrap(),
            SearchOutcome::Found(_)
        );
        ensure(found, || format!("deleting vertex {} leaves an unlabellable graph", v + 1))?;
    }
    let s = is_minimally_unlabellable(&g, opts).unwrap().status;
    ensure(s == Status::MinimallyUnlabellable, || format!("classified {s:?}"))?;
    let (g, l) = fixtures::hexagon_with_ear();
    ensure(l.check(&g).is_ok(), || "hexagon with ear: labelling invalid".into())?;
    Ok("two labellable, one minimal, printed labellings valid".into())
}

fn label_forms(g: &Graph, l: &Labelling) -> Result<(), String> {
    for (a, m, b) in common::induced_paths(g) {
        let cands = middle_label_candidates(l.label(a), l.label(b)).map_err(|e| e.to_string())?;
        ensure(cands.iter().any(|c| c == l.label(m)), || format!("path middle outside candidates in {g:?}"))?;
    }
    for [a, b, c] in common::triangles(g) {
        ensure(triangle_form(l.label(a), l.label(b), l.label(c)).is_some(), || format!("triangle shape in {g:?}"))?;
    }
    for (t1, t2) in common::diamonds(g) {
        let f1 = triangle_form(l.label(t1[0]), l.label(t1[1]), l.label(t1[2]));
        let f2 = triangle_form(l.label(t2[0]), l.label(t2[1]), l.label(t2[2]));
        let mixed = matches!(
            (f1, f2),
            (Some(TriangleForm::Alpha), Some(TriangleForm::Beta)) | (Some(TriangleForm::Beta), Some(TriangleForm::Alpha))
        );
        ensure(mixed, || format!("diamond triangles {f1:?} {f2:?} in {g:?}"))?;
    }
    Ok(())
}

fn property_suites() -> Check {
    let mut labellings = 0;
    for n in 1..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if let SearchOutcome::Found(l) = find_labelling(&g, SearchBudget::for_graph(&g)).unwrap() {
                label_forms(&g, &l)?;
                labellings += 1;
            }
            for d in 1..=3 {
                let gg = build_gamma_graph(&g, d).unwrap();
                ensure(gg.labelling().check(&gg.graph).is_ok(), || format!("gamma graph labels of {g:?}"))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0d0);
    let mut compared = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.8);
        let g = common::random_graph(&mut rng, n, p);
        for d in 1..=3 {
            let fast = min_dominating_sets(&g, d).unwrap();
            let (gamma, sets) = common::brute_min_dominating(&g, d);
            ensure(fast.gamma == gamma && fast.min_sets == sets, || format!("domination mismatch on {g:?} d={d}"))?;
            compared += 1;
        }
    }
    Ok(format!("{labellings} labellings checked for path/triangle/diamond forms, {compared} domination comparisons"))
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() {
    let criteria: [Criterion; 9] = [
        ("example graph domination and gamma graphs", Duration::from_secs(1), example_graph),
        ("realizer roundtrip", Duration::from_secs(300), realizer_roundtrip),
        ("construction size table", Duration::from_secs(1), size_table),
        ("blocker involution", Duration::from_secs(60), blocker_involution),
        ("classification up to five vertices", Duration::from_secs(60), up_to_five),
        ("classification on six vertices", Duration::from_secs(600), six_vertices),
        ("wheel and fan families", Duration::from_secs(600), families),
        ("seven-vertex graphs", Duration::from_secs(300), seven_vertex_fixtures),
        ("property suites", Duration::from_secs(600), property_suites),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        println!(
            "{} {name} [{:.2}s / limit {}s]: {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
