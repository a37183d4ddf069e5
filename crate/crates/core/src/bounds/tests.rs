use super::*;
use crate::energy::energy_report;
use crate::graph::generators::*;
use crate::graph::parse_graph6;

fn single(id: &str, g: &Graph) -> BoundCheck {
    let report = energy_report(g).unwrap();
    lookup(id).unwrap().check(&Subjects::single(Subject::new(g, &report)), None, &Tolerances::default())
}

fn close(a: Option<f64>, b: f64) -> bool {
    a.is_some_and(|a| (a - b).abs() <= 1e-6)
}

#[test]
fn catalogue_ids_are_unique_and_complete() {
    let ids: Vec<_> = catalog().iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), 26);
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for spec in catalog() {
        if let Rule::Dominance { newer, older, .. } = spec.rule {
            assert_eq!(lookup(newer).unwrap().scope, spec.scope);
            assert_eq!(lookup(older).unwrap().scope, spec.scope);
        }
    }
}

#[test]
fn classify_tests_violation_first() {
    let tol = Tolerances::default();
    assert_eq!(tol.classify(0.0, 1.0), Status::Equality);
    assert_eq!(tol.classify(1e-8, 1.0), Status::Equality);
    assert_eq!(tol.classify(-1e-8, 1.0), Status::Violated);
    assert_eq!(tol.classify(-1e-10, 1.0), Status::Equality);
    assert_eq!(tol.classify(1e-3, 1.0), Status::Holds);
}

#[test]
fn star_center_equality_and_leaves() {
    let g = star(3).unwrap();
    let checks = check_vertex_upper_star(&g, &energy_report(&g).unwrap());
    assert_eq!(checks.len(), 4);
    assert_eq!(checks[0].status, Status::Equality);
    assert!(close(checks[0].lhs, 5.0 / 3.0 * 3f64.sqrt()));
    assert!(checks[0].witness_note.contains("star center"));
    assert_eq!(checks[0].family_agreement, Some(true));
    for leaf in &checks[1..] {
        assert_eq!(leaf.status, Status::Holds);
        assert!(close(leaf.lhs, 0.962250));
        assert!(close(leaf.rhs, 5.0 / 3.0));
        assert_eq!(leaf.family_agreement, Some(true));
    }
}

#[test]
fn cycle_four_vertex_bounds() {
    let g = cycle(4).unwrap();
    let report = energy_report(&g).unwrap();
    for c in check_vertex_upper_star(&g, &report) {
        assert!(close(c.lhs, 1.0) && close(c.rhs, 2f64.sqrt()));
        assert_eq!(c.status, Status::Holds);
    }
    for c in check_vertex_lower(&g, &report) {
        assert_eq!(c.status, Status::Equality);
        assert!(c.witness_note.contains("K_{dM,dM}"));
        assert!(c.witness_note.contains("k = 2"));
    }
}

#[test]
fn forgotten_vertex_bound_examples() {
    let p3 = path(3).unwrap();
    let c = check_vertex_upper_forgotten(&p3, &energy_report(&p3).unwrap());
    assert!(close(c[1].rhs, 3.5f64.sqrt()) && close(c[1].lhs, 1.767767));
    assert_eq!(c[1].status, Status::Holds);

    let k2 = complete(2).unwrap();
    let c = check_vertex_upper_forgotten(&k2, &energy_report(&k2).unwrap());
    assert!(c.iter().all(|c| c.status == Status::Equality));

    let k13 = star(3).unwrap();
    let c = check_vertex_upper_forgotten(&k13, &energy_report(&k13).unwrap());
    assert!(close(c[0].rhs, 3.0));
    assert_eq!(c[0].status, Status::Holds);
}

#[test]
fn vertex_lower_examples() {
    let p3 = path(3).unwrap();
    let c = check_vertex_lower(&p3, &energy_report(&p3).unwrap());
    assert!(close(c[1].rhs, 0.8));
    assert_eq!(c[1].status, Status::Holds);

    let k2 = complete(2).unwrap();
    let c = check_vertex_lower(&k2, &energy_report(&k2).unwrap());
    assert!(c.iter().all(|c| c.status == Status::Equality && c.family_agreement == Some(true)));
}

#[test]
fn sandwich_examples() {
    let c5 = cycle(5).unwrap();
    let (l, r) = check_sandwich(&c5, &energy_report(&c5).unwrap());
    assert_eq!((l.status, r.status), (Status::Equality, Status::Equality));
    assert!(close(l.lhs, 6.472136));

    let p3 = path(3).unwrap();
    let (l, r) = check_sandwich(&p3, &energy_report(&p3).unwrap());
    assert_eq!((l.status, r.status), (Status::Holds, Status::Equality));
    assert!(r.witness_note.contains("complete bipartite"));

    let p4 = path(4).unwrap();
    let (l, r) = check_sandwich(&p4, &energy_report(&p4).unwrap());
    assert_eq!((l.status, r.status), (Status::Holds, Status::Holds));
    assert!(close(l.rhs, 4.472136) && close(l.lhs, 5.385165) && close(r.rhs, 5.590170));
}

#[test]
fn sandwich_on_isolated_vertex_graph() {
    let g = path(3).unwrap().disjoint_union(&empty(1).unwrap());
    let (l, r) = check_sandwich(&g, &energy_report(&g).unwrap());
    assert_eq!(l.status, Status::Holds);
    assert_eq!(r.status, Status::NotApplicable);
    assert_eq!(r.witness_note, "delta_min = 0");
}

#[test]
fn spectral_radius_examples() {
    let k4 = complete(4).unwrap();
    let (l, _) = check_spectral_radius_sandwich(&k4, &energy_report(&k4).unwrap());
    assert_eq!(l.status, Status::Equality);

    let k12 = star(2).unwrap();
    let (_, r) = check_spectral_radius_sandwich(&k12, &energy_report(&k12).unwrap());
    assert_eq!(r.status, Status::Equality);
    assert!(close(r.lhs, 1.25 * 2f64.sqrt()));

    let p4 = path(4).unwrap();
    let (l, r) = check_spectral_radius_sandwich(&p4, &energy_report(&p4).unwrap());
    assert_eq!((l.status, r.status), (Status::Holds, Status::Holds));
    assert!(close(l.rhs, 1.618034) && close(l.lhs, 1.846291) && close(r.rhs, 2.022542));
}

#[test]
fn global_upper_examples() {
    let c = single("das_i", &matching(4).unwrap());
    assert!(close(c.rhs, 4.0));
    assert_eq!(c.status, Status::Equality);
    assert_eq!(c.family_agreement, Some(true));

    let p3 = path(3).unwrap();
    let c = check_global_upper("new_star_sum", &p3, &energy_report(&p3).unwrap()).unwrap();
    assert!(close(c.rhs, 4.267767));
    assert_eq!(c.status, Status::Holds);
    assert!(close(single("das_i", &p3).rhs, 4.330127));

    let clebsch = clebsch_complement().unwrap();
    let c = single("n_only_ex", &clebsch);
    assert!(close(c.rhs, 40.0) && close(c.lhs, 40.0));
    assert_eq!(c.status, Status::Equality);
    assert!(c.witness_note.contains("srg"));
    assert_eq!(c.family_agreement, Some(true));
}

#[test]
fn edgeless_graph_attains_das_i() {
    let g = parse_graph6("B?").unwrap();
    assert_eq!(single("das_i", &g).status, Status::Equality);
    assert_eq!(single("new_star_sum", &g).status, Status::Equality);
    assert_eq!(single("das_ii", &g).status, Status::NotApplicable);
}

#[test]
fn global_upper_preconditions() {
    let sparse = complete(2).unwrap().disjoint_union(&empty(1).unwrap());
    assert_eq!(single("koolen_moulton_ex", &sparse).status, Status::NotApplicable);
    let p3 = path(3).unwrap();
    assert_eq!(single("koolen_moulton_ex", &p3).status, Status::Holds);
    assert_eq!(single("wang_n_only", &p3).status, Status::NotApplicable);
    assert_eq!(single("mm22_ex", &complete(1).unwrap()).status, Status::NotApplicable);
    assert_eq!(single("new_star_sum", &complete(1).unwrap()).status, Status::NotApplicable);
    let k5 = complete(5).unwrap();
    assert_eq!(single("koolen_moulton_ex", &k5).status, Status::Equality);
    assert_eq!(single("mm22_ex", &matching(6).unwrap()).status, Status::Equality);
}

#[test]
fn global_upper_rejects_other_ids() {
    let p3 = path(3).unwrap();
    let r = energy_report(&p3).unwrap();
    assert!(matches!(check_global_upper("nope", &p3, &r), Err(BoundError::UnknownBound(_))));
    assert!(matches!(check_global_upper("sandwich_right", &p3, &r), Err(BoundError::UnknownBound(_))));
    assert!(matches!(check_global_upper("ng_wang", &p3, &r), Err(BoundError::WrongScope { .. })));
}

#[test]
fn complement_pair_examples() {
    let c5 = cycle(5).unwrap();
    let c = check_ng("ng_energy_lower", &c5).unwrap();
    assert!(close(c.lhs, 12.944272) && close(c.rhs, 8.0));
    assert_eq!(c.status, Status::Holds);
    let c = check_ng("ng_radius_lower", &c5).unwrap();
    assert!(close(c.lhs, 4.0));
    assert_eq!(c.status, Status::Equality);
    let c = check_ng("ng_sum_double", &c5).unwrap();
    assert!(close(c.rhs, 2.0 * 50f64.sqrt()));
    assert_eq!(c.status, Status::Holds);

    let p4 = path(4).unwrap();
    let c = check_ng("ng_radius_lower", &p4).unwrap();
    assert!(close(c.lhs, 3.692582));
    assert_eq!(c.status, Status::Holds);
}

#[test]
fn ng_wang_reports_every_failed_precondition() {
    let g = path(3).unwrap().disjoint_union(&empty(1).unwrap());
    let c = check_ng("ng_wang", &g).unwrap();
    assert_eq!(c.status, Status::NotApplicable);
    assert!(c.witness_note.contains("G disconnected"));
    assert!(c.witness_note.contains("isolated vertex in G"));
}

#[test]
fn dominance_examples() {
    let p3 = path(3).unwrap();
    let c = check_dominance("dominance:new_star_sum_vs_das_i", &p3).unwrap();
    assert!(c.slack.unwrap() > 0.0);

    let c5 = cycle(5).unwrap();
    let c = check_dominance("dominance:new_star_sum_vs_das_i", &c5).unwrap();
    assert!(c.slack.unwrap().abs() <= 1e-12);

    let c = check_dominance("dominance:ng_radius_lower_vs_ng_radius_wang", &path(4).unwrap()).unwrap();
    assert!(c.slack.unwrap() >= 0.0);

    let c = check_dominance("dominance:n_only_ex_vs_wang_n_only", &p3).unwrap();
    assert_eq!(c.status, Status::NotApplicable);

    assert!(check_dominance("das_i", &p3).is_err());
    assert!(check_dominance("dominance:nope", &p3).is_err());
}

#[test]
fn evaluate_skips_pair_bounds_without_complement() {
    let g = cycle(5).unwrap();
    let report = energy_report(&g).unwrap();
    let s = Subjects::single(Subject::new(&g, &report));
    assert!(evaluate(lookup("ng_wang").unwrap(), &s, &Tolerances::default()).is_none());
    let all = evaluate_all(&s, &Tolerances::default(), |_| true);
    assert!(all.iter().all(|c| c.scope != Scope::GraphPair));
    assert_eq!(all.iter().filter(|c| c.bound_id == "vertex_lower").count(), 5);
}

#[test]
fn filter_resolution() {
    assert_eq!(resolve_filter("all").unwrap().len(), 26);
    assert_eq!(resolve_filter("dominance:*").unwrap().len(), 5);
    assert_eq!(resolve_filter("das_i, sandwich_left").unwrap(), vec!["sandwich_left", "das_i"]);
    assert!(matches!(resolve_filter("bogus"), Err(BoundError::UnknownBound(_))));
    assert!(resolve_filter("").unwrap().is_empty());
}

#[test]
fn check_serializes_with_kebab_case() {
    let c = single("das_i", &path(3).unwrap());
    let json = serde_json::to_string(&c).unwrap();
    assert!(json.contains("\"scope\":\"whole-graph\""));
    assert!(json.contains("\"status\":\"holds\""));
    let back: BoundCheck = serde_json::from_str(&json).unwrap();
    assert_eq!(back, c);
}

mod invariants {
    use proptest::prelude::*;

    use super::*;
    use crate::energy::GraphAnalysis;

    fn graph() -> impl Strategy<Value = Graph> {
        (1usize..=11).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn no_catalogued_bound_is_violated(g in graph()) {
            let co = g.complement();
            let (a, ac) = (GraphAnalysis::of(&g).unwrap(), GraphAnalysis::of(&co).unwrap());
            let s = Subjects::pair(Subject::from_analysis(&g, &a), Subject::from_analysis(&co, &ac));
            for c in evaluate_all(&s, &Tolerances::default(), |_| true) {
                prop_assert_ne!(c.status, Status::Violated, "{} on {}", c.bound_id, g.to_graph6());
            }
        }

        #[test]
        fn vertex_energies_sum_to_energy(g in graph()) {
            let r = energy_report(&g).unwrap();
            let ext: f64 = r.extended_vertex_energies.iter().sum();
            let ord: f64 = r.vertex_energies.iter().sum();
            prop_assert!((ext - r.extended_energy).abs() <= 1e-9);
            prop_assert!((ord - r.ordinary_energy).abs() <= 1e-9);
            prop_assert!(r.extended_vertex_energies.iter().all(|&e| e >= -1e-12));
        }

        #[test]
        fn energies_ignore_labels((g, perm) in graph().prop_flat_map(|g| {
            let n = g.order();
            (Just(g), permutation(n))
        })) {
            let r = energy_report(&g).unwrap();
            let p = energy_report(&g.permuted(&perm)).unwrap();
            prop_assert!((r.extended_energy - p.extended_energy).abs() <= 1e-9);
            prop_assert!((r.ordinary_energy - p.ordinary_energy).abs() <= 1e-9);
            for (v, &img) in perm.iter().enumerate() {
                let d = (r.extended_vertex_energies[v] - p.extended_vertex_energies[img]).abs();
                prop_assert!(d <= 1e-8, "vertex {} -> {}: {}", v, img, d);
            }
        }

        #[test]
        fn regular_graphs_have_equal_energies(n in 3usize..=12, k in 1usize..=5) {
            let offsets: Vec<usize> = (1..=k.min((n - 1) / 2)).collect();
            let g = circulant(n, &offsets).unwrap();
            let r = energy_report(&g).unwrap();
            prop_assert!((r.extended_energy - r.ordinary_energy).abs() <= 1e-9);
        }
    }
}
