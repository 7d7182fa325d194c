use rgk::canon::canonical;
use rgk::colorings::{necessity_coloring, verify_no_blue_target, NecessityCase};
use rgk::graph::{complete_multipartite, copies, disjoint_union, join};
use rgk::trees::enumerate_free_trees;
use rgk::{Graph, NecessityParams, PartSizes, MAX_ORDER};

/// Wider grid than the acceptance suite: `h > 1`, `k = 3` and `p > snd`.
#[test]
fn necessity_grid_with_larger_blocks() {
    let mut seen_cases = [false; 2];
    for alpha in 1..=4usize {
        let snd = rgk::goodness::snd(alpha as u64).unwrap() as usize;
        for tree in enumerate_free_trees(snd).unwrap().trees {
            for (p, k, h) in [(snd, 3, 1), (snd + 1, 2, 2), (snd, 2, alpha + 1)] {
                for n in 1..=3 {
                    let Ok(params) = NecessityParams::new(alpha, p, k, n, h, tree.clone()) else { continue };
                    let c = necessity_coloring(&params).unwrap();
                    assert!(c.is_complementary());
                    assert_eq!(c.order(), k * (p * alpha + n * h - 1) + 1);
                    let expected = params.expected_red().unwrap();
                    assert_eq!(canonical(c.red()).form, canonical(&expected).form, "{params:?}");
                    let report = verify_no_blue_target(&c, &params.target_parts()).unwrap();
                    assert!(report.absent, "{params:?}: {}", report.explanation);
                    seen_cases[params.case().number() as usize - 1] = true;
                }
            }
        }
    }
    assert_eq!(seen_cases, [true, true]);
}

#[test]
fn red_graph_layout() {
    let tree = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    // alpha = 2, p = 3, k = 2, n = 4: block 10, t = 3, q = 1
    let params = NecessityParams::new(2, 3, 2, 4, 1, tree.clone()).unwrap();
    assert_eq!((params.t, params.q, params.case()), (3, 1, NecessityCase::Remainder));
    let c = necessity_coloring(&params).unwrap();
    let forest = disjoint_union(&[copies(&tree, 3).unwrap(), Graph::empty(1).unwrap()]).unwrap();
    let layered = join(&complete_multipartite(&PartSizes::repeated(9, 1).unwrap()).unwrap(), &forest).unwrap();
    assert_eq!(c.red(), &layered);
    assert!(c.order() <= MAX_ORDER);
}
