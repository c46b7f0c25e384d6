//! Internal state operators of type I and type II and state-morphism
//! operators: axiom checking, exhaustive (pruned) enumeration, and the
//! end-of-§5 structure theorems.

use crate::algebra::{Elem, FiniteEqAlgebra};
use crate::dedsys::{self, ElementSet};
use crate::error::{Error, Result};
use crate::report::AxiomReport;
use crate::translate;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A unary operator on the carrier with its classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateOperator {
    pub n: usize,
    pub map: Vec<Elem>,
    pub type_one: bool,
    pub type_two: bool,
    pub morphism: bool,
    pub faithful: bool,
}

impl StateOperator {
    pub fn kernel(&self, alg: &FiniteEqAlgebra) -> ElementSet {
        let elems: Vec<Elem> = (0..self.n).filter(|&x| self.map[x] == alg.top).collect();
        ElementSet::from_elems(self.n, &elems)
    }

    pub fn image(&self) -> Vec<Elem> {
        let mut im: Vec<Elem> = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn render(&self, alg: &FiniteEqAlgebra) -> String {
        self.map
            .iter()
            .map(|&v| alg.name(v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Result of checking one axiom family: on failure, the first violated axiom
/// and its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagCheck {
    pub holds: bool,
    pub axiom: Option<&'static str>,
    pub witness: Option<Vec<Elem>>,
}

impl FlagCheck {
    fn pass() -> Self {
        FlagCheck { holds: true, axiom: None, witness: None }
    }

    fn fail(axiom: &'static str, witness: Vec<Elem>) -> Self {
        FlagCheck { holds: false, axiom: Some(axiom), witness: Some(witness) }
    }
}

#[derive(Debug, Clone)]
pub struct StateCheck {
    pub type_one: FlagCheck,
    pub type_two: FlagCheck,
    pub morphism: FlagCheck,
}

fn is1_witness(alg: &FiniteEqAlgebra, s: &[Elem]) -> Option<Vec<Elem>> {
    for x in 0..alg.n {
        for y in 0..alg.n {
            if alg.leq(x, y) && !alg.leq(s[x], s[y]) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// (IS₂): σ(x∧y∼x) = σ(y) ∼ σ(x∨₁y) and σ(x⤙x∧y) = σ(x∨₂y) ⤙ σ(y); the
/// primed variant swaps the roles of x and y inside the joins.
fn is2_witness(alg: &FiniteEqAlgebra, s: &[Elem], primed: bool) -> Option<Vec<Elem>> {
    for x in 0..alg.n {
        for y in 0..alg.n {
            let (v1, v2) = if primed {
                (alg.vee1(y, x), alg.vee2(y, x))
            } else {
                (alg.vee1(x, y), alg.vee2(x, y))
            };
            if s[alg.arrow(x, y)] != alg.sim(s[y], s[v1])
                || s[alg.squig(x, y)] != alg.bsim(s[v2], s[y])
            {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn is3_witness(alg: &FiniteEqAlgebra, s: &[Elem]) -> Option<Vec<Elem>> {
    for x in 0..alg.n {
        for y in 0..alg.n {
            let a = alg.sim(s[x], s[y]);
            let b = alg.bsim(s[x], s[y]);
            if s[a] != a || s[b] != b {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn is4_witness(alg: &FiniteEqAlgebra, s: &[Elem]) -> Option<Vec<Elem>> {
    for x in 0..alg.n {
        for y in 0..alg.n {
            let m = alg.meet(s[x], s[y]);
            if s[m] != m {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn sm_witness(alg: &FiniteEqAlgebra, s: &[Elem]) -> Option<(&'static str, Vec<Elem>)> {
    for x in 0..alg.n {
        for y in 0..alg.n {
            if s[alg.sim(x, y)] != alg.sim(s[x], s[y]) {
                return Some(("SM1", vec![x, y]));
            }
            if s[alg.bsim(x, y)] != alg.bsim(s[x], s[y]) {
                return Some(("SM2", vec![x, y]));
            }
            if s[alg.meet(x, y)] != alg.meet(s[x], s[y]) {
                return Some(("SM3", vec![x, y]));
            }
        }
        if s[s[x]] != s[x] {
            return Some(("SM4", vec![x]));
        }
    }
    None
}

fn type_check(alg: &FiniteEqAlgebra, s: &[Elem], primed: bool) -> FlagCheck {
    if let Some(w) = is1_witness(alg, s) {
        return FlagCheck::fail("IS1", w);
    }
    if let Some(w) = is2_witness(alg, s, primed) {
        return FlagCheck::fail(if primed { "IS2'" } else { "IS2" }, w);
    }
    if let Some(w) = is3_witness(alg, s) {
        return FlagCheck::fail("IS3", w);
    }
    if let Some(w) = is4_witness(alg, s) {
        return FlagCheck::fail("IS4", w);
    }
    FlagCheck::pass()
}

pub fn check_state(alg: &FiniteEqAlgebra, map: &[Elem]) -> Result<StateCheck> {
    if map.len() != alg.n || map.iter().any(|&v| v >= alg.n) {
        return Err(Error::InvalidInput("state map must have n in-range entries".into()));
    }
    Ok(StateCheck {
        type_one: type_check(alg, map, false),
        type_two: type_check(alg, map, true),
        morphism: match sm_witness(alg, map) {
            Some((axiom, w)) => FlagCheck::fail(axiom, w),
            None => FlagCheck::pass(),
        },
    })
}

fn flag_operator(alg: &FiniteEqAlgebra, map: Vec<Elem>) -> Option<StateOperator> {
    let c = check_state(alg, &map).expect("in-range map");
    if !(c.type_one.holds || c.type_two.holds || c.morphism.holds) {
        return None;
    }
    let faithful = (0..alg.n).all(|x| (map[x] == alg.top) == (x == alg.top));
    Some(StateOperator {
        n: alg.n,
        map,
        type_one: c.type_one.holds,
        type_two: c.type_two.holds,
        morphism: c.morphism.holds,
        faithful,
    })
}

pub fn budget_from_env() -> u64 {
    std::env::var("EQALG_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// All maps that are a type-I state, a type-II state, or a state-morphism,
/// in lexicographic map order.
pub fn enumerate_states(alg: &FiniteEqAlgebra) -> Result<Vec<StateOperator>> {
    enumerate_states_with_budget(alg, budget_from_env())
}

pub fn enumerate_states_with_budget(
    alg: &FiniteEqAlgebra,
    budget: u64,
) -> Result<Vec<StateOperator>> {
    let report = alg.verify_axioms()?;
    if !report.passed() {
        return Err(Error::InvalidInput("enumerate_states needs a valid algebra".into()));
    }
    let n = alg.n;
    let mut map = vec![usize::MAX; n];
    map[alg.top] = alg.top;
    let mut out = Vec::new();
    let mut visited: u64 = 0;

    // Necessary conditions for every flagged operator (Prop 5.15 and SM3/SM4):
    // σ(1) = 1, σ idempotent, σ monotone. Prune on all three while branching
    // in index order.
    fn consistent(alg: &FiniteEqAlgebra, map: &[Elem], x: Elem, v: Elem) -> bool {
        if map[v] != usize::MAX && map[v] != v {
            return false;
        }
        for u in 0..alg.n {
            if map[u] == usize::MAX || u == x {
                continue;
            }
            if map[u] == x && v != x {
                return false;
            }
            if alg.leq(u, x) && !alg.leq(map[u], v) {
                return false;
            }
            if alg.leq(x, u) && !alg.leq(v, map[u]) {
                return false;
            }
        }
        true
    }

    fn go(
        alg: &FiniteEqAlgebra,
        map: &mut Vec<Elem>,
        idx: usize,
        visited: &mut u64,
        budget: u64,
        out: &mut Vec<StateOperator>,
    ) -> Result<()> {
        let Some(x) = (idx..alg.n).find(|&i| map[i] == usize::MAX) else {
            if let Some(op) = flag_operator(alg, map.clone()) {
                out.push(op);
            }
            return Ok(());
        };
        for v in 0..alg.n {
            *visited += 1;
            if *visited > budget {
                return Err(Error::Resource(format!(
                    "state search exceeded budget of {} partial maps",
                    budget
                )));
            }
            if consistent(alg, map, x, v) {
                map[x] = v;
                go(alg, map, idx + 1, visited, budget, out)?;
                map[x] = usize::MAX;
            }
        }
        Ok(())
    }

    go(alg, &mut map, 0, &mut visited, budget, &mut out)?;
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(out)
}

/// Prop 5.15(1)–(7), Prop 5.16, Prop 5.17, and Theorem 5.18 over the full
/// enumerated operator list.
pub fn state_properties_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let ops = enumerate_states(alg)?;
    let commutative = alg.commutativity_flag().holds;
    let symmetric = alg.symmetry_flag().holds;
    let linear = alg.linearity_flag().holds;
    let invariant = translate::check_invariant(alg)?.holds;

    for op in &ops {
        if !(op.type_one || op.type_two) {
            continue;
        }
        let s = &op.map;
        if s[alg.top] != alg.top {
            r.record("Prop 5.15(1)", &[], op.render(alg));
        }
        if (0..alg.n).any(|x| s[s[x]] != s[x]) {
            r.record("Prop 5.15(2)", &[], op.render(alg));
        }
        let image = op.image();
        let fixed: Vec<Elem> = (0..alg.n).filter(|&x| s[x] == x).collect();
        if image != fixed {
            r.record("Prop 5.15(3)", &[], op.render(alg));
        }
        let closed = image.iter().all(|&x| {
            image.iter().all(|&y| {
                image.binary_search(&alg.meet(x, y)).is_ok()
                    && image.binary_search(&alg.sim(x, y)).is_ok()
                    && image.binary_search(&alg.bsim(x, y)).is_ok()
            })
        });
        if !closed || image.binary_search(&alg.top).is_err() {
            r.record("Prop 5.15(4)", &[], op.render(alg));
        }
        let ker = op.kernel(alg);
        let meet_im: Vec<Elem> = image.iter().copied().filter(|&x| ker.contains(x)).collect();
        if meet_im != vec![alg.top] {
            r.record("Prop 5.15(5)", &[], op.render(alg));
        }
        if !dedsys::is_ds(alg, &ker) {
            r.record("Prop 5.15(6)", &[], op.render(alg));
        }
        if invariant {
            let ker_closed = ker.iter().all(|x| {
                ker.iter().all(|y| {
                    ker.contains(alg.meet(x, y))
                        && ker.contains(alg.sim(x, y))
                        && ker.contains(alg.bsim(x, y))
                })
            });
            if !ker_closed {
                r.record("Prop 5.15(7)", &[], op.render(alg));
            }
        }
        if commutative && op.faithful {
            for x in 0..alg.n {
                for y in 0..alg.n {
                    if alg.leq(x, y) && x != y && !(alg.leq(s[x], s[y]) && s[x] != s[y]) {
                        r.record("Prop 5.17(1)", &[x, y], op.render(alg));
                    }
                }
            }
            if linear && (0..alg.n).any(|x| s[x] != x) {
                r.record("Prop 5.17(2)", &[], op.render(alg));
            }
        }
    }

    let t1: Vec<&StateOperator> = ops.iter().filter(|o| o.type_one).collect();
    let t2: Vec<&StateOperator> = ops.iter().filter(|o| o.type_two).collect();
    let sm: Vec<&StateOperator> = ops.iter().filter(|o| o.morphism).collect();
    let sets_i_ii_equal =
        t1.len() == t2.len() && t1.iter().zip(&t2).all(|(a, b)| a.map == b.map);
    if sets_i_ii_equal != commutative {
        r.record(
            "Prop 5.16",
            &[],
            format!("type sets equal = {}, commutative = {}", sets_i_ii_equal, commutative),
        );
    }
    if commutative && symmetric && linear {
        let morph_match =
            t1.len() == sm.len() && t1.iter().zip(&sm).all(|(a, b)| a.map == b.map);
        if !(sets_i_ii_equal && morph_match) {
            r.record("Theorem 5.18", &[], "operator sets do not coincide");
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::algebra::fixtures::{diamond, point};

    fn brute_force(alg: &FiniteEqAlgebra) -> Vec<StateOperator> {
        let n = alg.n;
        let mut out = Vec::new();
        let total = (n as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let map: Vec<Elem> = (0..n)
                .map(|_| {
                    let v = (c % n as u64) as usize;
                    c /= n as u64;
                    v
                })
                .collect();
            if let Some(op) = flag_operator(alg, map) {
                out.push(op);
            }
        }
        out.sort_by(|a, b| a.map.cmp(&b.map));
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for alg in [diamond(), point(), chain(2), chain(3), chain(4)] {
            let fast = enumerate_states(&alg).unwrap();
            assert_eq!(fast, brute_force(&alg), "n = {}", alg.n);
        }
    }

    #[test]
    fn diamond_contains_id_and_const_top() {
        let alg = diamond();
        let ops = enumerate_states(&alg).unwrap();
        let id = ops.iter().find(|o| o.map == vec![0, 1, 2, 3]).expect("identity");
        assert!(id.type_one && id.type_two && id.morphism && id.faithful);
        let one = ops.iter().find(|o| o.map == vec![3, 3, 3, 3]).expect("constant top");
        assert!(one.type_one && one.type_two && one.morphism && !one.faithful);
    }

    #[test]
    fn type_sets_agree_on_commutative_fixtures() {
        for alg in [diamond(), chain(3)] {
            assert!(alg.commutativity_flag().holds);
            let ops = enumerate_states(&alg).unwrap();
            for op in ops {
                assert_eq!(op.type_one, op.type_two, "map {:?}", op.map);
            }
        }
    }

    #[test]
    fn check_state_reports_witnesses() {
        let alg = diamond();
        let c = check_state(&alg, &[0, 1, 2, 3]).unwrap();
        assert!(c.type_one.holds && c.type_two.holds && c.morphism.holds);
        // Swapping the top for 0 breaks monotonicity immediately.
        let c = check_state(&alg, &[3, 1, 2, 0]).unwrap();
        assert!(!c.type_one.holds);
        assert_eq!(c.type_one.axiom, Some("IS1"));
        assert!(c.type_one.witness.is_some());
        assert!(check_state(&alg, &[0, 0, 0, 9]).is_err());
    }

    #[test]
    fn point_has_one_operator() {
        assert_eq!(enumerate_states(&point()).unwrap().len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_states_with_budget(&diamond(), 2),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn properties_suite_on_fixtures() {
        for alg in [diamond(), point(), chain(3), chain(4)] {
            let r = state_properties_suite(&alg).unwrap();
            assert!(r.passed(), "violations: {:?}", r.violations);
        }
    }

    #[test]
    fn theorem_5_18_on_chain_4() {
        let alg = chain(4);
        assert!(alg.commutativity_flag().holds);
        assert!(alg.symmetry_flag().holds);
        assert!(alg.linearity_flag().holds);
        let ops = enumerate_states(&alg).unwrap();
        for op in ops {
            assert_eq!(op.type_one, op.type_two);
            assert_eq!(op.type_one, op.morphism, "map {:?}", op.map);
        }
    }
}
