mod common;

use common::{set, to_set, Set};
use otfpg::fixpoints::{attr, cpre, mattr, mpre, pre, safe_set, sattr, smattr, smpre, spre, AttractorResult};
use otfpg::fixtures::{five_vertex_game, six_vertex_snapshot};
use otfpg::{IncompleteGame, Player, Priority, VertexSet};
use proptest::prelude::*;

fn vs(s: &Set) -> VertexSet {
    s.iter().copied().collect()
}

fn check_strategy(g: &IncompleteGame, p: Player, target: &VertexSet, r: &AttractorResult) {
    let game = g.game();
    let allowed = r.set.union(target);
    for (&v, &w) in &r.strategy {
        assert_eq!(game.owner(v), p);
        assert!(r.set.contains(v));
        assert!(game.has_edge(v, w));
        assert!(allowed.contains(w), "{v}->{w} leaves the attractor");
    }
}

fn player(even: bool) -> Player {
    if even {
        Player::Even
    } else {
        Player::Odd
    }
}

#[test]
fn five_vertex_operators() {
    let g = IncompleteGame::complete(five_vertex_game());
    assert_eq!(pre(&g, &set(&[2])), set(&[0, 3]));
    assert!(pre(&g, &set(&[])).is_empty());
    assert_eq!(pre(&g, g.vertices()), set(&[0, 2, 3, 4]));
    assert_eq!(cpre(&g, Player::Even, &set(&[2])), set(&[0]));
    assert!(cpre(&g, Player::Even, &set(&[])).is_empty());
    assert_eq!(cpre(&g, Player::Odd, &set(&[3])), set(&[4]));
    assert_eq!(attr(&g, Player::Even, &set(&[2])).set, set(&[0, 2]));
    assert_eq!(sattr(&g, Player::Even, &set(&[2])).set, set(&[0, 2]));
    assert_eq!(mpre(&g, Player::Odd, &set(&[]), &set(&[3]), Priority(1)), set(&[4]));
    assert_eq!(mattr(&g, Player::Odd, &set(&[3]), Priority(1)).set, set(&[3, 4]));
    assert!(mattr(&g, Player::Odd, &set(&[]), Priority(1)).set.is_empty());
    let c0 = mpre(&g, Player::Even, &set(&[0]), &set(&[2]), Priority(0));
    assert_eq!(c0, cpre(&g, Player::Even, &set(&[0, 2])));
}

#[test]
fn six_vertex_operators() {
    let g = six_vertex_snapshot();
    assert_eq!(safe_set(&g, Player::Even), set(&[0, 1, 2, 3]));
    assert_eq!(safe_set(&g, Player::Odd), set(&[0, 1, 2, 4, 5]));
    assert_eq!(attr(&g, Player::Odd, &set(&[5])).set, set(&[4, 5]));
    assert_eq!(spre(&g, Player::Even, &set(&[2])), set(&[0, 3]));
    assert!(spre(&g, Player::Even, &set(&[3])).is_empty());
    let restricted = g.subgame(&set(&[0, 1, 2, 3]));
    let edges: Vec<(usize, usize)> = restricted
        .vertices()
        .iter()
        .flat_map(|v| restricted.game().successors(v).iter().map(move |w| (v.index(), w.index())))
        .collect();
    assert_eq!(edges, [(0, 1), (0, 2), (2, 0), (3, 2)]);
}

#[test]
fn complete_games_have_full_safe_sets() {
    for seed in 0..50 {
        let g = IncompleteGame::complete(common::random_universe(seed, 1, 40));
        for p in Player::BOTH {
            assert_eq!(&safe_set(&g, p), g.vertices());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operators_match_definitions(seed in any::<u64>(), even in any::<bool>(), c in 0u32..6) {
        let g = common::random_game(seed, 1, 40);
        let p = player(even);
        let u = common::random_subset(&common::vertices(&g), seed.rotate_left(7));
        let target = vs(&u);
        let c = Priority(c);

        prop_assert_eq!(to_set(&pre(&g, &target)), common::pre(&g, &u));
        prop_assert_eq!(to_set(&cpre(&g, p, &target)), common::cpre(&g, p, &u, false));
        prop_assert_eq!(to_set(&spre(&g, p, &target)), common::cpre(&g, p, &u, true));

        let a = attr(&g, p, &target);
        prop_assert_eq!(to_set(&a.set), common::attr(&g, p, &u, false));
        check_strategy(&g, p, &target, &a);
        let s = sattr(&g, p, &target);
        prop_assert_eq!(to_set(&s.set), common::attr(&g, p, &u, true));
        check_strategy(&g, p, &target, &s);

        let m = mattr(&g, p, &target, c);
        prop_assert_eq!(to_set(&m.set), common::mattr(&g, p, &u, c, false));
        check_strategy(&g, p, &target, &m);
        let sm = smattr(&g, p, &target, c);
        prop_assert_eq!(to_set(&sm.set), common::mattr(&g, p, &u, c, true));
        check_strategy(&g, p, &target, &sm);

        let z = common::random_subset(&u, seed ^ 1);
        let zu: Set = z.union(&u).copied().collect();
        let high = common::at_least(&g, c);
        let expect: Set = common::cpre(&g, p, &zu, true).intersection(&high).copied().collect();
        prop_assert_eq!(to_set(&smpre(&g, p, &vs(&z), &target, c)), expect);

        prop_assert_eq!(to_set(&safe_set(&g, p)), common::safe_set(&g, p));
    }

    #[test]
    fn safe_operators_equal_operators_on_safe_subgame(seed in any::<u64>(), even in any::<bool>(), c in 0u32..6) {
        let g = common::random_game(seed, 1, 60);
        let p = player(even);
        let safe = safe_set(&g, p);
        let h = g.subgame(&safe);
        let x: VertexSet = common::random_subset(&to_set(&safe), seed.rotate_left(3)).iter().copied().collect();
        prop_assert_eq!(spre(&g, p, &x), cpre(&h, p, &x));
        prop_assert_eq!(sattr(&g, p, &x).set, attr(&h, p, &x).set);
        prop_assert_eq!(smattr(&g, p, &x, Priority(c)).set, mattr(&h, p, &x, Priority(c)).set);
    }

    #[test]
    fn without_incomplete_vertices_safe_and_plain_agree(seed in any::<u64>(), even in any::<bool>(), c in 0u32..6) {
        let g = IncompleteGame::complete(common::random_universe(seed, 1, 40));
        let p = player(even);
        let u: VertexSet = common::random_subset(&common::vertices(&g), seed).iter().copied().collect();
        prop_assert_eq!(spre(&g, p, &u), cpre(&g, p, &u));
        prop_assert_eq!(sattr(&g, p, &u), attr(&g, p, &u));
        prop_assert_eq!(smattr(&g, p, &u, Priority(c)), mattr(&g, p, &u, Priority(c)));
    }
}
