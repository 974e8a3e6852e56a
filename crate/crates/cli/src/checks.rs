//! Reference checks run by `verify-fixtures`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gammagraphs::canon::are_isomorphic;
use gammagraphs::classify::{is_minimally_unlabellable, ClassifyOptions, Status};
use gammagraphs::clutter::validate_clutter;
use gammagraphs::labelling::wheel_labelling;
use gammagraphs::realizer::{construction_size, hhl_size, verify_realization};
use gammagraphs::{build_gamma_graph, family, fixtures, realize};

type Check = Result<(), String>;

fn example_graph() -> Check {
    let g = fixtures::domination_example();
    let gg1 = build_gamma_graph(&g, 1).map_err(|e| e.to_string())?;
    if gg1.gamma != 2 || !gg1.graph.same_labelled_graph(&fixtures::domination_example_gamma1()) {
        return Err(format!("distance-1 gamma graph {:?}", gg1.graph));
    }
    let gg2 = build_gamma_graph(&g, 2).map_err(|e| e.to_string())?;
    if gg2.graph.names() != ["2", "3", "5", "6", "7"] || gg2.graph.edge_count() != 10 {
        return Err(format!("distance-2 gamma graph {:?}", gg2.graph));
    }
    Ok(())
}

fn sizes() -> Check {
    let small = fixtures::small_family();
    let large = fixtures::larger_family();
    let got = (
        construction_size(&small, 3).map_err(|e| e.to_string())?,
        construction_size(&small, 1).map_err(|e| e.to_string())?,
        construction_size(&large, 1).map_err(|e| e.to_string())?,
        hhl_size(&small).map_err(|e| e.to_string())?,
        hhl_size(&large).map_err(|e| e.to_string())?,
    );
    if got != ((22, 26), (10, 14), (28, 68), (36, 62), (613, 2728)) {
        return Err(format!("{got:?}"));
    }
    Ok(())
}

fn printed_labellings() -> Check {
    for (g, l) in [
        fixtures::seven_vertex_labellable_a(),
        fixtures::seven_vertex_labellable_b(),
        fixtures::hexagon_with_ear(),
    ] {
        l.check(&g).map_err(|v| format!("{g:?}: {v}"))?;
    }
    let w = wheel_labelling(9).map_err(|e| e.to_string())?;
    w.check(&family::wheel(9).unwrap()).map_err(|v| v.to_string())
}

fn minimal_lists() -> Check {
    let opts = ClassifyOptions::default();
    let lists = fixtures::five_vertex_minimal()
        .into_iter()
        .chain(fixtures::six_vertex_minimal())
        .chain([fixtures::seven_vertex_minimal()]);
    for g in lists {
        let v = is_minimally_unlabellable(&g, opts).map_err(|e| e.to_string())?;
        if v.status != Status::MinimallyUnlabellable {
            return Err(format!("{g:?}: {:?}", v.status));
        }
    }
    let f24 = family::fan(2, 4).unwrap();
    let v = is_minimally_unlabellable(&f24, opts).map_err(|e| e.to_string())?;
    let w = v
        .witness
        .as_ref()
        .ok_or_else(|| format!("fan:2,4 classified {:?}", v.status))?;
    let witness = f24.induced_subgraph(w).unwrap();
    if !are_isomorphic(&witness, &fixtures::five_vertex_minimal()[2]).unwrap() {
        return Err(format!("fan:2,4 witness {witness:?}"));
    }
    Ok(())
}

fn random_realizations(seed: u64, samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < samples {
        let n = rng.gen_range(1..=6u32);
        let k = rng.gen_range(1..=n.min(3));
        let d = rng.gen_range(1..=3);
        let sets: Vec<Vec<u32>> = (0u32..1 << n)
            .filter(|m| m.count_ones() == k && rng.gen_bool(0.4))
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        if sets.is_empty() {
            continue;
        }
        let c = validate_clutter(n as usize, &sets).map_err(|e| e.to_string())?;
        let r = realize(&c, d).map_err(|e| e.to_string())?;
        let report = verify_realization(&r, &c).map_err(|e| e.to_string())?;
        if !report.ok {
            return Err(format!("{:?} at d={d}: {report:?}", c.members()));
        }
        done += 1;
    }
    Ok(())
}

/// Prints one line per check; true when all pass.
pub fn run(seed: u64, samples: usize) -> bool {
    let checks: Vec<(String, Check)> = vec![
        ("example graph gamma graphs".into(), example_graph()),
        ("realization sizes".into(), sizes()),
        ("printed labellings".into(), printed_labellings()),
        ("minimally unlabellable lists".into(), minimal_lists()),
        (format!("random realizations (seed {seed}, {samples} samples)"), random_realizations(seed, samples)),
    ];
    let mut ok = true;
    for (name, result) in checks {
        match result {
            Ok(()) => println!("PASS {name}"),
            Err(e) => {
                ok = false;
                println!("FAIL {name}: {e}");
            }
        }
    }
    ok
}
