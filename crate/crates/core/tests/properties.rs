use proptest::prelude::*;

use boggle_core::board::standard_board;
use boggle_core::dihedral::{canonical_board, DihedralElement};
use boggle_core::extremal::overlap;
use boggle_core::graph::{canonical_form, isomorphic, permute_graph, AdjacencyGraph, SimpleGraph};
use boggle_core::io::{format_board, format_graph, format_puzzle, parse_board, parse_graph, parse_puzzle, Alphabet};
use boggle_core::multiset::{pattern_count, word_signature, Pattern};
use boggle_core::paths::PathCatalog;
use boggle_core::puzzle::{Puzzle, Solver};
use boggle_core::report::Report;
use boggle_core::{Board, Label, Permutation, Word};

fn shuffled(n: usize, order: &[usize]) -> Board {
    let s = standard_board(n).unwrap();
    Board::new(n, order.iter().map(|&i| s.get(i)).collect()).unwrap()
}

fn arb_board3() -> impl Strategy<Value = Board> {
    Just((0..9).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|order| shuffled(3, &order))
}

fn arb_relabel() -> impl Strategy<Value = Permutation> {
    Just((1..=9u16).collect::<Vec<u16>>())
        .prop_shuffle()
        .prop_map(|img| Permutation::from_map((1..=9u16).zip(img).map(|(a, b)| (Label(a), Label(b)))).unwrap())
}

fn arb_words() -> impl Strategy<Value = Vec<Word>> {
    let catalog = PathCatalog::new(3, 4).unwrap();
    let paths: Vec<Vec<u8>> = (2..=4).flat_map(|k| catalog.paths(k).map(|p| p.to_vec()).collect::<Vec<_>>()).collect();
    (arb_board3(), prop::collection::vec(0..paths.len(), 1..8)).prop_map(move |(b, picks)| {
        picks
            .into_iter()
            .map(|i| Word::new(paths[i].iter().map(|&c| b.get(c as usize)).collect()).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn overlap_is_symmetric_and_invariant(b in arb_board3(), d1 in 0..8usize, d2 in 0..8usize) {
        let s = standard_board(3).unwrap();
        let base = overlap(&s, &b, 3).unwrap();
        prop_assert_eq!(overlap(&b, &s, 3).unwrap(), base);
        let (e1, e2) = (DihedralElement::ALL[d1], DihedralElement::ALL[d2]);
        prop_assert_eq!(overlap(&e1.apply(&s), &e2.apply(&b), 3).unwrap(), base);
        prop_assert!(base <= 160);
    }

    #[test]
    fn relabelling_preserves_overlap(b in arb_board3(), g in arb_relabel()) {
        let s = standard_board(3).unwrap();
        prop_assert_eq!(overlap(&s.permute(&g), &b.permute(&g), 4).unwrap(), overlap(&s, &b, 4).unwrap());
    }

    #[test]
    fn solving_commutes_with_relabelling_and_symmetry(words in arb_words(), g in arb_relabel(), d in 0..8usize) {
        let solver = Solver::new(3).unwrap().with_solution_cap(usize::MAX);
        let p = Puzzle::new(words);
        let r = solver.solve(&p).unwrap();
        prop_assert!(r.orbit_count >= 1);
        let q = solver.solve(&p.relabel(&g)).unwrap();
        prop_assert_eq!(q.status, r.status);
        prop_assert_eq!(q.orbit_count, r.orbit_count);
        let mut moved: Vec<Board> = r
            .solutions
            .iter()
            .map(|b| canonical_board(&DihedralElement::ALL[d].apply(&b.permute(&g))))
            .collect();
        moved.sort();
        prop_assert_eq!(moved, q.solutions);
    }

    #[test]
    fn canonical_form_ignores_vertex_order(
        n in 1..9usize,
        bits in prop::collection::vec(any::<bool>(), 36),
        perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let mut edges = Vec::new();
        let mut i = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits[i] {
                    edges.push((a, b));
                }
                i += 1;
            }
        }
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let h = permute_graph(&g, &p);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn text_formats_round_trip(b in arb_board3(), words in arb_words()) {
        let text = format_board(&b, &Alphabet::Numeric);
        prop_assert_eq!(parse_board(&text).unwrap().0, b);
        let p = Puzzle::new(words);
        let (back, _) = parse_puzzle(&format_puzzle(&p, &Alphabet::Numeric), None, None).unwrap();
        prop_assert_eq!(&back, &p);
        let g = p.adjacency_graph().unwrap();
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn signatures_and_patterns_ignore_symmetry(b in arb_board3(), d in 0..8usize) {
        let e = DihedralElement::ALL[d];
        prop_assert_eq!(word_signature(&b, 4).unwrap(), word_signature(&e.apply(&b), 4).unwrap());
        let one = b.get(0).0;
        let p: Pattern = format!("{one}-x").parse().unwrap();
        prop_assert_eq!(pattern_count(&b, &p).unwrap(), pattern_count(&e.apply(&b), &p).unwrap());
    }
}

#[test]
fn solution_boards_contain_every_word() {
    let p = Puzzle::from_strs(&["1-2-3", "3-4-5", "5-6-7", "7-8-1", "9-2"]).unwrap();
    let r = Solver::new(3).unwrap().solve(&p).unwrap();
    for b in &r.solutions {
        for w in p.words() {
            assert!(boggle_core::words::word_on_board(b, w));
        }
    }
}

#[test]
fn reports_round_trip_through_text() {
    let r = boggle_core::reproduce::reproduce("lambda81".parse().unwrap());
    assert_eq!(r.render().parse::<Report>().unwrap(), r);
}

#[test]
fn letter_boards_round_trip() {
    let text = "3\na c o\nt p l\ne n d\n";
    let (b, alphabet) = parse_board(text).unwrap();
    assert_eq!(format_board(&b, &alphabet), text);
    let g = AdjacencyGraph::from_words(&[Word::from_values(&[1, 2]).unwrap()]).unwrap();
    assert_eq!(g.edge_count(), 1);
}
