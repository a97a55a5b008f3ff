mod common;

use std::collections::BTreeSet;

use common::*;
use vcrit::enumerate::{census_copaw_critical, census_general, CensusError, SearchSpace};
use vcrit::{
    canonical_form, co_odd_cycle, copaw_decompose, find_critical_subgraph, independence_number, is_free, is_isomorphic,
    is_vertex_critical, CanonicalCode, PatternName,
};

fn codes(graphs: &[vcrit::Graph]) -> BTreeSet<CanonicalCode> {
    graphs.iter().map(canonical_form).collect()
}

#[test]
fn table_two_small_levels() {
    let c4 = census_copaw_critical(4, 7).unwrap();
    assert_eq!(c4.counts(), [(4, 1), (5, 0), (6, 1), (7, 6)]);
    assert_eq!(c4.total(), 8);
    let c5 = census_copaw_critical(5, 9).unwrap();
    assert_eq!(c5.counts(), [(5, 1), (6, 0), (7, 1), (8, 6), (9, 170)]);
    assert_eq!(c5.codes(), codes(&appendix()));
    let c3 = census_copaw_critical(3, 5).unwrap();
    assert_eq!(c3.counts(), [(3, 1), (4, 0), (5, 1)]);
}

#[test]
fn table_two_level_six() {
    let c6 = census_copaw_critical(6, 11).unwrap();
    assert_eq!(c6.counts(), [(6, 1), (7, 0), (8, 1), (9, 6), (10, 171), (11, 17828)]);
    assert_eq!(c6.total(), 18007);
    assert!(c6.row(11).unwrap().graphs.as_ref().unwrap().contains(&canonical_form(&co_odd_cycle(6).unwrap())));
}

#[test]
fn census_members_recheck() {
    for k in 3..=5 {
        let c = census_copaw_critical(k, 2 * k - 1).unwrap();
        for row in &c.rows {
            let graphs = row.graphs.as_ref().unwrap();
            assert_eq!(graphs.len(), row.count);
            for code in graphs {
                let g = code.graph();
                assert_eq!(g.order(), row.n);
                assert!(is_vertex_critical(&g, k).is_critical);
                assert!(!brute_contains(&g, &PatternName::P3PlusP1.graph().unwrap()));
                assert!(copaw_decompose(&g).is_some());
                assert!(independence_number(&g) <= 2 && g.order() < 2 * k);
            }
        }
        let top = canonical_form(&co_odd_cycle(k).unwrap());
        assert!(c.row(2 * k - 1).unwrap().graphs.as_ref().unwrap().contains(&top));
    }
}

#[test]
fn two_pipelines_agree_up_to_order_seven() {
    for k in 3..=6 {
        let a = census_copaw_critical(k, 7.min(2 * k - 1)).unwrap();
        let b = census_general(k, Some(PatternName::P3PlusP1), 7.min(2 * k - 1), SearchSpace::AllGraphs).unwrap();
        assert_eq!(a.codes(), b.codes(), "k = {k}");
        assert_eq!(a.counts(), b.counts());
    }
    // Over all graphs to order 9 nothing outside α ≤ 2 appears.
    let all = census_general(4, Some(PatternName::P3PlusP1), 9, SearchSpace::AllGraphs).unwrap();
    assert_eq!(all.total(), 8);
}

#[test]
fn three_critical_graphs_are_odd_cycles() {
    let c = census_general(3, None, 7, SearchSpace::AllGraphs).unwrap();
    assert_eq!(c.codes(), codes(&[cycle(3), cycle(5), cycle(7)]));
    for l in 1..=3 {
        let c = census_general(3, Some(PatternName::P2PlusP1s(l)), 2 * l + 1, SearchSpace::AllGraphs).unwrap();
        let expected: Vec<_> = (1..=l).map(|m| cycle(2 * m + 1)).collect();
        assert_eq!(c.codes(), codes(&expected), "l = {l}");
        assert_eq!(c.total(), l);
    }
    // One more order than needed finds nothing new.
    let c = census_general(3, Some(PatternName::P2PlusP1s(2)), 8, SearchSpace::AllGraphs).unwrap();
    assert_eq!(c.total(), 2);
}

#[test]
fn four_critical_filters_match_figure_one() {
    let fig = figure1();
    let pick = |idx: &[usize]| codes(&idx.iter().map(|&i| fig[i - 1]).collect::<Vec<_>>());
    let c = census_general(4, Some(PatternName::P2PlusP1s(2)), 9, SearchSpace::AllGraphs).unwrap();
    assert_eq!(c.codes(), pick(&[1, 2, 3, 4, 5, 6, 7, 8, 9]));
    // The seven 2K2-free graphs include G10 and G11, of orders 10 and 13,
    // which are past the all-graphs order cap.
    let c = census_general(4, Some(PatternName::TwoK2), 9, SearchSpace::AllGraphs).unwrap();
    assert_eq!(c.codes(), pick(&[1, 2, 3, 7, 9]));
    let c = census_general(4, Some(PatternName::Path(4)), 9, SearchSpace::AllGraphs).unwrap();
    assert!(c.codes().iter().all(|code| fig.iter().any(|g| is_isomorphic(g, &code.graph()))));
}

#[test]
fn alpha_two_space_matches_copaw_census() {
    let a = census_general(5, Some(PatternName::P3PlusP1), 9, SearchSpace::AlphaAtMostTwo).unwrap();
    assert_eq!(a.codes(), codes(&appendix()));
    let b = census_general(4, None, 9, SearchSpace::AlphaAtMostTwo).unwrap();
    assert!(b.codes().iter().all(|c| independence_number(&c.graph()) <= 2));
    assert!(b.codes().iter().all(|c| find_critical_subgraph(&c.graph(), 4).unwrap().len() == c.order()));
    assert!(b.codes().is_superset(&census_copaw_critical(4, 7).unwrap().codes()));
    assert!(b.codes().iter().all(|c| c.order() <= 7 || !is_free(&c.graph(), PatternName::P3PlusP1)));
}

#[test]
fn census_limits() {
    assert_eq!(census_copaw_critical(2, 3), Err(CensusError::UnsupportedK(2)));
    assert_eq!(census_copaw_critical(8, 11), Err(CensusError::UnsupportedK(8)));
    assert!(matches!(census_copaw_critical(4, 8), Err(CensusError::OrderTooLarge { .. })));
    assert!(matches!(census_copaw_critical(7, 13), Err(CensusError::OrderTooLarge { .. })));
    assert!(matches!(census_general(4, None, 10, SearchSpace::AllGraphs), Err(CensusError::OrderTooLarge { .. })));
    assert!(matches!(census_general(4, None, 12, SearchSpace::AlphaAtMostTwo), Err(CensusError::OrderTooLarge { .. })));
    let partial = census_copaw_critical(7, 9).unwrap();
    assert_eq!(partial.counts(), [(7, 1), (8, 0), (9, 1)]);
}

#[test]
fn census_text_outputs() {
    let c = census_copaw_critical(4, 7).unwrap();
    assert_eq!(c.to_csv(), "k,n,count\n4,4,1\n4,5,0\n4,6,1\n4,7,6\n");
    assert!(c.to_table().ends_with("total         8\n"));
}
