//! Isomorph-free exhaustive generation of finite pseudo equality algebras and
//! a counterexample finder over the workbench's classification predicates.
//!
//! Generation runs in three stages: enumerate meet-semilattices with top up
//! to isomorphism, backtrack over the ∼/⤙ tables with A2/A3 pre-filled and
//! A4–A7 checked incrementally on partial tables, and reject non-canonical
//! completions under the semilattice's automorphism group.

use crate::algebra::{Elem, FiniteEqAlgebra};
use crate::dedsys;
use crate::error::{Error, Result};
use crate::translate;

pub const DEFAULT_SIZE_CAP: usize = 5;

const UNSET: usize = usize::MAX;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

fn permute_table(t: &[Vec<Elem>], p: &[usize]) -> Vec<Vec<Elem>> {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[p[x]][p[y]] = p[t[x][y]];
        }
    }
    out
}

/// All meet-semilattices with top on `n` elements, up to isomorphism, as
/// canonical (lexicographically minimal) meet tables.
fn meet_semilattices(n: usize) -> Vec<(Vec<Vec<Elem>>, Elem)> {
    if n == 1 {
        return vec![(vec![vec![0]], 0)];
    }
    let perms = permutations(n);
    let pair_count = n * (n - 1);
    let pair_idx = |x: usize, y: usize| x * (n - 1) + if y < x { y } else { y - 1 };
    let mut canon = std::collections::BTreeSet::new();
    let mut out = Vec::new();

    'mask: for mask in 0u64..(1 << pair_count) {
        let lt = |x: usize, y: usize| x != y && mask >> pair_idx(x, y) & 1 == 1;
        let leq = |x: usize, y: usize| x == y || lt(x, y);
        for x in 0..n {
            for y in x + 1..n {
                if lt(x, y) && lt(y, x) {
                    continue 'mask;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) {
                    for z in 0..n {
                        if lt(y, z) && !lt(x, z) {
                            continue 'mask;
                        }
                    }
                }
            }
        }
        let Some(_top) = (0..n).find(|&t| (0..n).all(|x| leq(x, t))) else {
            continue;
        };
        let mut meet = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> =
                    (0..n).filter(|&z| leq(z, x) && leq(z, y)).collect();
                let Some(&m) = lower.iter().find(|&&m| lower.iter().all(|&z| leq(z, m)))
                else {
                    continue 'mask;
                };
                meet[x][y] = m;
            }
        }
        let min_form = perms
            .iter()
            .map(|p| permute_table(&meet, p))
            .min()
            .expect("nonempty permutation set");
        if canon.insert(min_form.clone()) {
            let t = (0..n)
                .find(|&t| (0..n).all(|x| min_form[x][t] == x))
                .expect("top survives relabeling");
            out.push((min_form, t));
        }
    }
    out.sort();
    out
}

fn automorphisms(meet: &[Vec<Elem>]) -> Vec<Vec<usize>> {
    permutations(meet.len())
        .into_iter()
        .filter(|p| permute_table(meet, p) == meet)
        .collect()
}

struct Skeleton {
    n: usize,
    top: Elem,
    meet: Vec<Vec<Elem>>,
    leq: Vec<Vec<bool>>,
    autos: Vec<Vec<usize>>,
}

struct Tables {
    sim: Vec<Vec<usize>>,
    bsim: Vec<Vec<usize>>,
}

impl Skeleton {
    /// Partial-table order test: true only when both sides are assigned and
    /// the inequality holds; unknown cells leave the instance undecided.
    fn le_cells(&self, a: usize, b: usize) -> bool {
        a == UNSET || b == UNSET || self.leq[a][b]
    }

    /// All A4–A7 ground instances decidable on the current partial tables.
    fn partial_ok(&self, t: &Tables) -> bool {
        let n = self.n;
        let (sim, bsim) = (&t.sim, &t.bsim);
        let cell = |tab: &Vec<Vec<usize>>, x: usize, y: usize| {
            if x == UNSET || y == UNSET {
                UNSET
            } else {
                tab[x][y]
            }
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.leq[x][y] && self.leq[y][z] {
                        // A4
                        if !self.le_cells(sim[x][z], sim[y][z])
                            || !self.le_cells(sim[x][z], sim[x][y])
                            || !self.le_cells(bsim[z][x], bsim[z][y])
                            || !self.le_cells(bsim[z][x], bsim[y][x])
                        {
                            return false;
                        }
                    }
                    let (xz, yz) = (self.meet[x][z], self.meet[y][z]);
                    // A5
                    if !self.le_cells(sim[x][y], sim[xz][yz])
                        || !self.le_cells(bsim[x][y], bsim[xz][yz])
                    {
                        return false;
                    }
                    // A6
                    if !self.le_cells(sim[x][y], cell(bsim, sim[z][x], sim[z][y]))
                        || !self.le_cells(bsim[x][y], cell(sim, bsim[x][z], bsim[y][z]))
                    {
                        return false;
                    }
                    // A7
                    if !self.le_cells(sim[x][y], cell(sim, sim[x][z], sim[y][z]))
                        || !self.le_cells(bsim[x][y], cell(bsim, bsim[z][x], bsim[z][y]))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn complete(&self, t: &Tables) -> FiniteEqAlgebra {
        FiniteEqAlgebra {
            n: self.n,
            names: (0..self.n).map(|i| format!("e{}", i)).collect(),
            top: self.top,
            meet: self.meet.clone(),
            sim: t.sim.clone(),
            bsim: t.bsim.clone(),
        }
    }

    /// Lexicographically minimal image of (sim, bsim) under the semilattice
    /// automorphisms; only minimal completions are emitted.
    fn is_canonical(&self, t: &Tables) -> bool {
        let current = (t.sim.clone(), t.bsim.clone());
        for p in &self.autos {
            let image = (permute_table(&t.sim, p), permute_table(&t.bsim, p));
            if image < current {
                return false;
            }
        }
        true
    }
}

fn complete_skeleton(sk: &Skeleton, out: &mut Vec<FiniteEqAlgebra>) {
    let n = sk.n;
    let mut t = Tables {
        sim: vec![vec![UNSET; n]; n],
        bsim: vec![vec![UNSET; n]; n],
    };
    // A2 and A3 pre-fill: x∼x = x⤙x = 1, x∼1 = x, 1⤙x = x.
    for x in 0..n {
        t.sim[x][x] = sk.top;
        t.bsim[x][x] = sk.top;
        t.sim[x][sk.top] = x;
        t.bsim[sk.top][x] = x;
    }
    let mut cells: Vec<(bool, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if t.sim[x][y] == UNSET {
                cells.push((true, x, y));
            }
            if t.bsim[x][y] == UNSET {
                cells.push((false, x, y));
            }
        }
    }

    fn go(sk: &Skeleton, t: &mut Tables, cells: &[(bool, usize, usize)], out: &mut Vec<FiniteEqAlgebra>) {
        let Some(&(is_sim, x, y)) = cells.first() else {
            if sk.is_canonical(t) {
                let alg = sk.complete(t);
                debug_assert!(alg.verify_axioms().map(|r| r.passed()).unwrap_or(false));
                out.push(alg);
            }
            return;
        };
        for v in 0..sk.n {
            if is_sim {
                t.sim[x][y] = v;
            } else {
                t.bsim[x][y] = v;
            }
            if sk.partial_ok(t) {
                go(sk, t, &cells[1..], out);
            }
        }
        if is_sim {
            t.sim[x][y] = UNSET;
        } else {
            t.bsim[x][y] = UNSET;
        }
    }
    if sk.partial_ok(&t) {
        go(sk, &mut t, &cells, out);
    }
}

/// Every pseudo equality algebra with `size` elements, exactly once up to
/// isomorphism, in a fixed canonical order.
pub fn enumerate_algebras(size: usize) -> Result<Vec<FiniteEqAlgebra>> {
    enumerate_algebras_capped(size, DEFAULT_SIZE_CAP)
}

pub fn enumerate_algebras_capped(size: usize, cap: usize) -> Result<Vec<FiniteEqAlgebra>> {
    if size == 0 {
        return Err(Error::InvalidInput("size must be at least 1".into()));
    }
    if size > cap {
        return Err(Error::Resource(format!(
            "size {} exceeds the enumeration cap of {}",
            size, cap
        )));
    }
    let mut out = Vec::new();
    for (meet, top) in meet_semilattices(size) {
        let n = meet.len();
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                leq[x][y] = meet[x][y] == x;
            }
        }
        let autos = automorphisms(&meet);
        let sk = Skeleton { n, top, meet, leq, autos };
        complete_skeleton(&sk, &mut out);
    }
    Ok(out)
}

pub const PREDICATE_NAMES: &[&str] = &[
    "bounded",
    "lattice",
    "distributive_lattice",
    "linear",
    "invariant",
    "commutative",
    "symmetric",
    "simple",
];

pub fn eval_predicate(name: &str, alg: &FiniteEqAlgebra) -> Result<bool> {
    match name {
        "bounded" => Ok(alg.classify()?.is_bounded.holds),
        "lattice" => Ok(alg.lattice_flag().holds),
        "distributive_lattice" => Ok(alg.distributivity_flag().holds),
        "linear" => Ok(alg.linearity_flag().holds),
        "invariant" => Ok(translate::check_invariant(alg)?.holds),
        "commutative" => Ok(alg.commutativity_flag().holds),
        "symmetric" => Ok(alg.symmetry_flag().holds),
        "simple" => dedsys::is_simple(alg),
        _ => Err(Error::InvalidInput(format!(
            "unknown predicate {:?}; known: {}",
            name,
            PREDICATE_NAMES.join(", ")
        ))),
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchQuery {
    pub max_size: usize,
    pub require: Vec<String>,
    pub forbid: Vec<String>,
    pub limit: Option<usize>,
    pub size_cap: usize,
}

impl SearchQuery {
    pub fn new(max_size: usize) -> Self {
        SearchQuery { max_size, size_cap: DEFAULT_SIZE_CAP, ..Default::default() }
    }
}

/// First enumerated algebra (in canonical order, smallest size first)
/// satisfying all required and none of the forbidden predicates.
pub fn find_counterexample(q: &SearchQuery) -> Result<Option<FiniteEqAlgebra>> {
    for name in q.require.iter().chain(&q.forbid) {
        if !PREDICATE_NAMES.contains(&name.as_str()) {
            return Err(Error::InvalidInput(format!(
                "unknown predicate {:?}; known: {}",
                name,
                PREDICATE_NAMES.join(", ")
            )));
        }
    }
    for size in 1..=q.max_size {
        for alg in enumerate_algebras_capped(size, q.size_cap)? {
            let mut ok = true;
            for name in &q.require {
                ok &= eval_predicate(name, &alg)?;
            }
            for name in &q.forbid {
                ok &= !eval_predicate(name, &alg)?;
            }
            if ok {
                return Ok(Some(alg));
            }
        }
    }
    Ok(None)
}

/// Table-preserving bijection test (isomorphism of algebras).
pub fn isomorphic(a: &FiniteEqAlgebra, b: &FiniteEqAlgebra) -> bool {
    if a.n != b.n {
        return false;
    }
    permutations(a.n).iter().any(|p| {
        p[a.top] == b.top
            && permute_table(&a.meet, p) == b.meet
            && permute_table(&a.sim, p) == b.sim
            && permute_table(&a.bsim, p) == b.bsim
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::diamond;

    #[test]
    fn sizes_one_and_two() {
        assert_eq!(enumerate_algebras(1).unwrap().len(), 1);
        // Size 2: A2/A3 pin all but sim(1,0) and bsim(0,1), and A6 forces those
        // two free cells to agree, leaving exactly two completions. One is the
        // 2-chain (invariant, the Phi-image of the two-element BCK-algebra);
        // the other is the symmetric biimplication model, which is not
        // invariant but satisfies every axiom.
        let two = enumerate_algebras(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().any(|a| isomorphic(a, &crate::algebra::chain(2))));
        assert!(two
            .iter()
            .any(|a| eval_predicate("symmetric", a).unwrap()
                && !eval_predicate("invariant", a).unwrap()));
    }

    #[test]
    fn size_two_brute_force_oracle() {
        // All 2-element operation tables over the forced 2-chain order.
        let mut found = Vec::new();
        for code in 0u32..(1 << 8) {
            let bit = |i: u32| ((code >> i) & 1) as usize;
            let alg = FiniteEqAlgebra {
                n: 2,
                names: vec!["e0".into(), "e1".into()],
                top: 1,
                meet: vec![vec![0, 0], vec![0, 1]],
                sim: vec![vec![bit(0), bit(1)], vec![bit(2), bit(3)]],
                bsim: vec![vec![bit(4), bit(5)], vec![bit(6), bit(7)]],
            };
            if alg.verify_axioms().unwrap().passed() {
                found.push(alg);
            }
        }
        assert_eq!(found.len(), 2);
        let enumerated = enumerate_algebras(2).unwrap();
        for alg in &found {
            assert!(enumerated.iter().any(|e| isomorphic(alg, e)));
        }
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(enumerate_algebras(6), Err(Error::Resource(_))));
        assert!(enumerate_algebras(0).is_err());
    }

    #[test]
    fn size_three_sound_and_isomorph_free() {
        let algs = enumerate_algebras(3).unwrap();
        assert!(!algs.is_empty());
        for a in &algs {
            assert!(a.verify_axioms().unwrap().passed());
            assert!(a.identity_suite().unwrap().passed());
        }
        for i in 0..algs.len() {
            for j in i + 1..algs.len() {
                assert!(!isomorphic(&algs[i], &algs[j]), "{} vs {}", i, j);
            }
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let a = enumerate_algebras(3).unwrap();
        let b = enumerate_algebras(3).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!((&x.meet, &x.sim, &x.bsim), (&y.meet, &y.sim, &y.bsim));
        }
    }

    #[test]
    fn size_four_contains_the_diamond() {
        let algs = enumerate_algebras(4).unwrap();
        let d = diamond();
        assert!(algs.iter().any(|a| isomorphic(a, &d)));
    }

    #[test]
    fn counterexample_queries() {
        let mut q = SearchQuery::new(3);
        q.require = vec!["commutative".into()];
        q.forbid = vec!["distributive_lattice".into()];
        assert!(find_counterexample(&q).unwrap().is_none());

        let q = SearchQuery::new(3);
        assert_eq!(find_counterexample(&q).unwrap().unwrap().n, 1);

        let mut q = SearchQuery::new(2);
        q.require = vec!["no_such_flag".into()];
        assert!(find_counterexample(&q).is_err());
    }
}
