//! Deductive systems of a pseudo equality algebra: enumeration, closure,
//! classification (closed / normal / commutative), the induced congruences
//! and quotient algebras, and the quotient commutativity theorem.

use crate::algebra::{Elem, FiniteEqAlgebra};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// A subset of the carrier as a bitset. Carrier sizes stay at desk scale, so
/// a single word suffices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    pub n: usize,
    pub bits: u64,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "carrier too large for the bitset representation");
        ElementSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        s.bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        s
    }

    pub fn from_elems(n: usize, elems: &[Elem]) -> Self {
        let mut s = Self::empty(n);
        for &e in elems {
            assert!(e < n);
            s.bits |= 1 << e;
        }
        s
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits >> e & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: Elem) {
        self.bits |= 1 << e;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).filter(move |&e| self.contains(e))
    }

    pub fn render(&self, alg: &FiniteEqAlgebra) -> String {
        let names: Vec<&str> = self.iter().map(|e| alg.name(e)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A deductive system together with its classification flags.
#[derive(Debug, Clone)]
pub struct DsRecord {
    pub set: ElementSet,
    pub is_ds: bool,
    pub is_closed: bool,
    pub is_normal: bool,
    pub is_commutative: bool,
    pub is_proper: bool,
    pub is_maximal: bool,
}

fn is_upset(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.iter().all(|x| (0..alg.n).all(|y| !alg.leq(x, y) || d.contains(y)))
}

/// DS3: `x ∈ D` and `y ∼ x ∈ D` imply `y ∈ D`.
fn ds3_closed(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.iter().all(|x| (0..alg.n).all(|y| !d.contains(alg.sim(y, x)) || d.contains(y)))
}

/// DS3′: `x ∈ D` and `x ⤙ y ∈ D` imply `y ∈ D`.
fn ds3p_closed(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.iter().all(|x| (0..alg.n).all(|y| !d.contains(alg.bsim(x, y)) || d.contains(y)))
}

/// DS4: `x ∈ D` and `x∧y ∼ x ∈ D` imply `y ∈ D` (the arrow form).
fn ds4_closed(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.iter().all(|x| (0..alg.n).all(|y| !d.contains(alg.arrow(x, y)) || d.contains(y)))
}

/// DS4′: `x ∈ D` and `x ⤙ x∧y ∈ D` imply `y ∈ D` (the squig form).
fn ds4p_closed(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.iter().all(|x| (0..alg.n).all(|y| !d.contains(alg.squig(x, y)) || d.contains(y)))
}

/// Full deductive-system test on an arbitrary subset.
pub fn is_ds(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.contains(alg.top) && is_upset(alg, d) && ds3_closed(alg, d)
}

/// Closed: `1 ∼ x, x ⤙ 1 ∈ D` for all `x ∈ D` (equivalent to the pairwise
/// definition).
pub fn is_closed_ds(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    d.iter()
        .all(|x| d.contains(alg.sim(alg.top, x)) && d.contains(alg.bsim(x, alg.top)))
}

/// DS5 normality: the two equality directions detect the same pairs.
pub fn is_normal_ds(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    for x in 0..alg.n {
        for y in 0..alg.n {
            let fwd = d.contains(alg.sim(x, y)) && d.contains(alg.sim(y, x));
            let bwd = d.contains(alg.bsim(y, x)) && d.contains(alg.bsim(x, y));
            if fwd != bwd {
                return false;
            }
        }
    }
    true
}

/// Commutativity of a deductive system (cds₁ and cds₂), cross-checked against
/// the three-condition upset characterization.
pub fn is_commutative_ds(alg: &FiniteEqAlgebra, d: &ElementSet) -> Result<bool> {
    if !is_ds(alg, d) {
        return Err(Error::Precondition(format!(
            "{} is not a deductive system",
            d.render(alg)
        )));
    }
    let direct = cds_direct(alg, d);
    let via_upset = cds_three_conditions(alg, d);
    assert_eq!(
        direct, via_upset,
        "cds definition and its characterization disagree on {}",
        d.render(alg)
    );
    Ok(direct)
}

fn cds_direct(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    for x in 0..alg.n {
        for y in 0..alg.n {
            let m = alg.meet(x, y);
            // cds1: x∧y ∼ y ∈ D implies x ∼ (x ∨₁ y) ∈ D.
            if d.contains(alg.sim(m, y)) && !d.contains(alg.sim(x, alg.vee1(x, y))) {
                return false;
            }
            // cds2: y ⤙ x∧y ∈ D implies (x ∨₂ y) ⤙ x ∈ D.
            if d.contains(alg.bsim(y, m)) && !d.contains(alg.bsim(alg.vee2(x, y), x)) {
                return false;
            }
        }
    }
    true
}

fn cds_three_conditions(alg: &FiniteEqAlgebra, d: &ElementSet) -> bool {
    if !d.contains(alg.top) || !is_upset(alg, d) {
        return false;
    }
    for x in 0..alg.n {
        for y in 0..alg.n {
            let m = alg.meet(x, y);
            let t = alg.sim(m, y);
            let u = alg.bsim(y, m);
            for z in 0..alg.n {
                if !d.contains(z) {
                    continue;
                }
                if d.contains(alg.sim(alg.meet(t, z), z))
                    && !d.contains(alg.sim(x, alg.vee1(x, y)))
                {
                    return false;
                }
                if d.contains(alg.bsim(z, alg.meet(u, z)))
                    && !d.contains(alg.bsim(alg.vee2(x, y), x))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn upsets_containing_top(alg: &FiniteEqAlgebra) -> Vec<ElementSet> {
    // DFS over elements: including x forces everything above x in.
    let n = alg.n;
    let mut out = Vec::new();
    let mut state = vec![None::<bool>; n];
    state[alg.top] = Some(true);
    fn go(
        alg: &FiniteEqAlgebra,
        state: &mut Vec<Option<bool>>,
        idx: usize,
        out: &mut Vec<ElementSet>,
    ) {
        let n = alg.n;
        let next = (idx..n).find(|&i| state[i].is_none());
        let Some(i) = next else {
            let elems: Vec<usize> = (0..n).filter(|&e| state[e] == Some(true)).collect();
            out.push(ElementSet::from_elems(n, &elems));
            return;
        };
        // Exclude i: everything below i must already be excluded or undecided
        // (undecided elements below i get forced out when visited — enforce
        // eagerly to keep the state consistent).
        let below: Vec<usize> = (0..n).filter(|&z| alg.leq(z, i) && z != i).collect();
        if below.iter().all(|&z| state[z] != Some(true)) {
            let mut touched = vec![i];
            state[i] = Some(false);
            let mut ok = true;
            for &z in &below {
                match state[z] {
                    None => {
                        state[z] = Some(false);
                        touched.push(z);
                    }
                    Some(false) => {}
                    Some(true) => ok = false,
                }
            }
            if ok {
                go(alg, state, idx + 1, out);
            }
            for z in touched {
                state[z] = None;
            }
        }
        // Include i: everything above i is forced in.
        let above: Vec<usize> = (0..n).filter(|&z| alg.leq(i, z) && z != i).collect();
        if above.iter().all(|&z| state[z] != Some(false)) {
            let mut touched = vec![i];
            state[i] = Some(true);
            for &z in &above {
                if state[z].is_none() {
                    state[z] = Some(true);
                    touched.push(z);
                }
            }
            go(alg, state, idx + 1, out);
            for z in touched {
                state[z] = None;
            }
        }
    }
    go(alg, &mut state, 0, &mut out);
    out
}

/// All deductive systems of `alg`, fully flagged, sorted by cardinality and
/// then by bitset value.
pub fn enumerate_ds(alg: &FiniteEqAlgebra) -> Result<Vec<DsRecord>> {
    let report = alg.verify_axioms()?;
    if !report.passed() {
        return Err(Error::InvalidInput("enumerate_ds needs a valid algebra".into()));
    }
    let mut sets: Vec<ElementSet> = upsets_containing_top(alg)
        .into_iter()
        .filter(|d| {
            let a = ds3_closed(alg, d);
            // Lemma 2.14: all four membership rules agree on upsets.
            assert_eq!(a, ds3p_closed(alg, d), "DS3 vs DS3' disagree");
            assert_eq!(a, ds4_closed(alg, d), "DS3 vs DS4 disagree");
            assert_eq!(a, ds4p_closed(alg, d), "DS3 vs DS4' disagree");
            a
        })
        .collect();
    sets.sort_by_key(|d| (d.len(), d.bits));

    let mut records: Vec<DsRecord> = sets
        .iter()
        .map(|&set| {
            Ok(DsRecord {
                set,
                is_ds: true,
                is_closed: is_closed_ds(alg, &set),
                is_normal: is_normal_ds(alg, &set),
                is_commutative: is_commutative_ds(alg, &set)?,
                is_proper: set.len() < alg.n,
                is_maximal: false,
            })
        })
        .collect::<Result<_>>()?;

    // Maximality by pairwise inclusion over the full enumerated list.
    for i in 0..records.len() {
        if !records[i].is_proper {
            continue;
        }
        records[i].is_maximal = records.iter().all(|other| {
            !other.is_proper
                || other.set == records[i].set
                || !records[i].set.is_subset(&other.set)
        });
    }
    Ok(records)
}

/// Least deductive system containing `seed`, by closure iteration.
pub fn generate_ds(alg: &FiniteEqAlgebra, seed: &ElementSet) -> Result<ElementSet> {
    let report = alg.verify_axioms()?;
    if !report.passed() {
        return Err(Error::InvalidInput("generate_ds needs a valid algebra".into()));
    }
    let mut d = *seed;
    d.insert(alg.top);
    loop {
        let before = d.bits;
        for x in 0..alg.n {
            for y in 0..alg.n {
                if d.contains(x) && alg.leq(x, y) {
                    d.insert(y);
                }
                if d.contains(x) && d.contains(alg.sim(y, x)) {
                    d.insert(y);
                }
            }
        }
        if d.bits == before {
            break;
        }
    }
    debug_assert!(is_ds(alg, &d));
    Ok(d)
}

/// Partition of the carrier by the congruence of a normal deductive system,
/// together with the quotient algebra.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub classes: Vec<Vec<Elem>>,
    pub projection: Vec<usize>,
    pub algebra: FiniteEqAlgebra,
}

/// Build `Θ_H` for a normal deductive system, verify it is a congruence, and
/// construct the quotient algebra with a well-definedness scan.
///
/// The correspondence between normal deductive systems and congruences is
/// only proved for invariant algebras, so nothing here is trusted: a failed
/// scan is surfaced as [`Error::CongruenceFailure`], never silently accepted.
pub fn congruence_of(alg: &FiniteEqAlgebra, h: &ElementSet) -> Result<QuotientResult> {
    if !is_ds(alg, h) {
        return Err(Error::Precondition(format!(
            "{} is not a deductive system",
            h.render(alg)
        )));
    }
    if !is_normal_ds(alg, h) {
        return Err(Error::Precondition(format!(
            "{} is not a normal deductive system",
            h.render(alg)
        )));
    }
    let n = alg.n;
    let related =
        |x: Elem, y: Elem| h.contains(alg.sim(x, y)) && h.contains(alg.sim(y, x));

    // Equivalence: reflexivity and symmetry hold by construction; check
    // transitivity explicitly.
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if related(x, y) && related(y, z) && !related(x, z) {
                    return Err(Error::CongruenceFailure(format!(
                        "Θ_H not transitive at ({}, {}, {})",
                        alg.name(x),
                        alg.name(y),
                        alg.name(z)
                    )));
                }
            }
        }
    }
    // Congruence: compatibility with all three operations.
    for x1 in 0..n {
        for y1 in 0..n {
            if !related(x1, y1) {
                continue;
            }
            for x2 in 0..n {
                for y2 in 0..n {
                    if !related(x2, y2) {
                        continue;
                    }
                    let ok = related(alg.meet(x1, x2), alg.meet(y1, y2))
                        && related(alg.sim(x1, x2), alg.sim(y1, y2))
                        && related(alg.bsim(x1, x2), alg.bsim(y1, y2));
                    if !ok {
                        return Err(Error::CongruenceFailure(format!(
                            "Θ_H not compatible at ({}, {}) ~ ({}, {})",
                            alg.name(x1),
                            alg.name(x2),
                            alg.name(y1),
                            alg.name(y2)
                        )));
                    }
                }
            }
        }
    }

    // Classes ordered by least representative.
    let mut projection = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let members: Vec<Elem> = (x..n).filter(|&y| related(x, y)).collect();
        for &m in &members {
            projection[m] = idx;
        }
        classes.push(members);
    }
    let k = classes.len();

    // Quotient tables, with a representative-independence scan.
    let mut qmeet = vec![vec![0; k]; k];
    let mut qsim = vec![vec![0; k]; k];
    let mut qbsim = vec![vec![0; k]; k];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            let rm = projection[alg.meet(ci[0], cj[0])];
            let rs = projection[alg.sim(ci[0], cj[0])];
            let rb = projection[alg.bsim(ci[0], cj[0])];
            for &x in ci {
                for &y in cj {
                    if projection[alg.meet(x, y)] != rm
                        || projection[alg.sim(x, y)] != rs
                        || projection[alg.bsim(x, y)] != rb
                    {
                        return Err(Error::CongruenceFailure(format!(
                            "quotient operation not well-defined on classes of {} and {}",
                            alg.name(ci[0]),
                            alg.name(cj[0])
                        )));
                    }
                }
            }
            qmeet[i][j] = rm;
            qsim[i][j] = rs;
            qbsim[i][j] = rb;
        }
    }

    let names = classes
        .iter()
        .map(|c| {
            let members: Vec<&str> = c.iter().map(|&e| alg.name(e)).collect();
            format!("[{}]", members.join(","))
        })
        .collect();
    let algebra = FiniteEqAlgebra {
        n: k,
        names,
        top: projection[alg.top],
        meet: qmeet,
        sim: qsim,
        bsim: qbsim,
    };
    let qr = algebra.verify_axioms()?;
    if !qr.passed() {
        return Err(Error::CongruenceFailure(format!(
            "quotient violates {}",
            qr.violations[0].label
        )));
    }
    Ok(QuotientResult { classes, projection, algebra })
}

/// For every normal deductive system `H`: commutativity of `H` must match
/// commutativity of the quotient `A/H`.
pub fn check_quotient_commutativity_theorem(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let invariant = alg.invariance_flag().holds;
    for rec in enumerate_ds(alg)? {
        if !rec.is_normal {
            continue;
        }
        let q = congruence_of(alg, &rec.set)?;
        // The proof identifies H with the Θ_H-class of the top. Outside the
        // invariant case that identification can fail (H can be a strict
        // superset of the class), and with it the theorem itself: a
        // non-invariant 3-chain has a commutative normal DS whose quotient
        // is the (non-commutative) algebra. The check is therefore
        // restricted to systems that are the top's class.
        let top_class = ElementSet::from_elems(alg.n, &q.classes[q.projection[alg.top]]);
        if top_class != rec.set {
            assert!(
                !invariant,
                "normal DS differs from the top class on an invariant algebra"
            );
            continue;
        }
        let qc = q.algebra.commutativity_flag().holds;
        if rec.is_commutative != qc {
            r.record(
                "Theorem 4.6",
                &rec.set.iter().collect::<Vec<_>>(),
                format!("cds = {} but quotient commutative = {}", rec.is_commutative, qc),
            );
        }
    }
    Ok(r)
}

/// Membership consequences of commutative deductive systems (Prop 4.7) and
/// the commutative-algebra corollaries (Cors 4.8–4.10).
pub fn ds_consequences_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let records = enumerate_ds(alg)?;
    let top = alg.top;
    for rec in &records {
        if !rec.is_commutative {
            continue;
        }
        let d = &rec.set;
        for x in 0..alg.n {
            for y in 0..alg.n {
                if alg.leq(y, x) {
                    let t1 = alg.sim(x, alg.bsim(alg.sim(y, x), y));
                    let t2 = alg.bsim(alg.sim(y, alg.bsim(x, y)), x);
                    if !(d.contains(t1) && d.contains(t2)) {
                        r.record("Prop 4.7(1)", &[x, y], d.render(alg));
                    }
                }
                // Both terms instantiate clause (1) at y ≤ p and y ≤ q.
                let p = alg.bsim(alg.sim(x, y), x);
                let q = alg.sim(x, alg.bsim(y, x));
                let t3 = alg.sim(p, alg.bsim(alg.sim(y, p), y));
                let t4 = alg.bsim(alg.sim(y, alg.bsim(q, y)), q);
                if !(d.contains(t3) && d.contains(t4)) {
                    r.record("Prop 4.7(2)", &[x, y], d.render(alg));
                }
            }
        }
    }
    if alg.commutativity_flag().holds {
        for x in 0..alg.n {
            for y in 0..alg.n {
                if alg.leq(y, x) {
                    if alg.sim(x, alg.bsim(alg.sim(y, x), y)) != top
                        || alg.bsim(alg.sim(y, alg.bsim(x, y)), x) != top
                    {
                        r.record("Cor 4.8", &[x, y], "");
                    }
                    if alg.bsim(alg.sim(y, x), y) != x || alg.sim(y, alg.bsim(x, y)) != x {
                        r.record("Cor 4.9", &[x, y], "");
                    }
                }
                if (alg.sim(x, y) == top || alg.bsim(y, x) == top)
                    && (alg.bsim(alg.sim(y, x), y) != x || alg.sim(y, alg.bsim(x, y)) != x)
                {
                    r.record("Cor 4.10", &[x, y], "");
                }
            }
        }
    }
    Ok(r)
}

/// The {1}-membership characterizations of commutativity: Prop 4.2 (every DS
/// of a commutative algebra is commutative), Prop 4.4 (commutative iff `{1}`
/// is a commutative DS), and Cor 4.5 (commutative iff every DS is).
pub fn commutative_ds_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let commutative = alg.commutativity_flag().holds;
    let records = enumerate_ds(alg)?;
    let all_cds = records.iter().all(|rec| rec.is_commutative);
    let trivial = ElementSet::from_elems(alg.n, &[alg.top]);
    let trivial_cds = is_commutative_ds(alg, &trivial)?;
    if commutative && !all_cds {
        r.record("Prop 4.2", &[], "a DS of a commutative algebra is not commutative");
    }
    if commutative != trivial_cds {
        r.record(
            "Prop 4.4",
            &[],
            format!("commutative = {commutative} but cds({{1}}) = {trivial_cds}"),
        );
    }
    if commutative != all_cds {
        r.record(
            "Cor 4.5",
            &[],
            format!("commutative = {commutative} but DS = DS_c is {all_cds}"),
        );
    }
    Ok(r)
}

/// Simple: the only deductive systems are `{1}` and the whole carrier.
pub fn is_simple(alg: &FiniteEqAlgebra) -> Result<bool> {
    Ok(enumerate_ds(alg)?.len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::algebra::fixtures::{diamond, point};

    #[test]
    fn quotient_commutativity_skips_systems_beyond_the_top_class() {
        // Non-invariant 3-chain: H = {1, 2} is a commutative normal DS, yet
        // Θ_H is the identity, so the quotient is the algebra itself and is
        // not commutative. The top's Θ_H-class is {2} ⊊ H, which is exactly
        // the case excluded from the quotient commutativity check.
        let alg = FiniteEqAlgebra {
            n: 3,
            names: ["0", "1", "2"].map(str::to_string).to_vec(),
            top: 2,
            meet: vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
            sim: vec![vec![2, 0, 0], vec![1, 2, 1], vec![1, 0, 2]],
            bsim: vec![vec![2, 1, 1], vec![0, 2, 0], vec![0, 1, 2]],
        };
        assert!(alg.verify_axioms().unwrap().passed());
        assert!(!alg.invariance_flag().holds);
        let h = ElementSet::from_elems(3, &[1, 2]);
        assert!(is_normal_ds(&alg, &h));
        assert!(is_commutative_ds(&alg, &h).unwrap());
        let q = congruence_of(&alg, &h).unwrap();
        assert_eq!(q.classes.len(), 3, "Θ_H is the identity relation");
        assert!(!q.algebra.commutativity_flag().holds);
        assert!(check_quotient_commutativity_theorem(&alg).unwrap().passed());
    }

    #[test]
    fn commutative_ds_suite_on_fixtures() {
        for alg in [diamond(), point(), chain(2), chain(4)] {
            assert!(commutative_ds_suite(&alg).unwrap().passed());
        }
        for n in 1..=3 {
            for alg in crate::search::enumerate_algebras(n).unwrap() {
                assert!(commutative_ds_suite(&alg).unwrap().passed());
            }
        }
    }

    fn brute_force_ds(alg: &FiniteEqAlgebra) -> Vec<ElementSet> {
        // Oracle: scan all 2^n subsets.
        let mut out = Vec::new();
        for bits in 0..(1u64 << alg.n) {
            let d = ElementSet { n: alg.n, bits };
            if is_ds(alg, &d) {
                out.push(d);
            }
        }
        out.sort_by_key(|d| (d.len(), d.bits));
        out
    }

    #[test]
    fn diamond_ds_list() {
        let alg = diamond();
        let records = enumerate_ds(&alg).unwrap();
        let rendered: Vec<String> = records.iter().map(|r| r.set.render(&alg)).collect();
        assert_eq!(rendered, vec!["{1}", "{a,1}", "{b,1}", "{0,a,b,1}"]);
        for rec in &records {
            assert!(rec.is_normal);
            assert!(rec.is_commutative);
        }
        assert!(!is_simple(&alg).unwrap());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for alg in [diamond(), point(), chain(4), chain(5)] {
            let fast: Vec<ElementSet> =
                enumerate_ds(&alg).unwrap().into_iter().map(|r| r.set).collect();
            assert_eq!(fast, brute_force_ds(&alg));
        }
    }

    #[test]
    fn point_and_chains() {
        assert_eq!(enumerate_ds(&point()).unwrap().len(), 1);
        // Bounded Łukasiewicz-style chains have no proper nontrivial upsets
        // closed under DS3, so every chain is simple.
        assert!(is_simple(&chain(2)).unwrap());
        assert!(is_simple(&chain(3)).unwrap());
        assert!(is_simple(&chain(5)).unwrap());
    }

    #[test]
    fn generated_systems() {
        let alg = diamond();
        let g = generate_ds(&alg, &ElementSet::from_elems(4, &[1])).unwrap();
        assert_eq!(g.render(&alg), "{a,1}");
        let e = generate_ds(&alg, &ElementSet::empty(4)).unwrap();
        assert_eq!(e.render(&alg), "{1}");
        let z = generate_ds(&alg, &ElementSet::from_elems(4, &[0])).unwrap();
        assert_eq!(z, ElementSet::full(4));
    }

    #[test]
    fn generated_equals_intersection_of_containing_ds() {
        for alg in [diamond(), chain(4)] {
            let all: Vec<ElementSet> =
                enumerate_ds(&alg).unwrap().into_iter().map(|r| r.set).collect();
            for bits in 0..(1u64 << alg.n) {
                let seed = ElementSet { n: alg.n, bits };
                let gen = generate_ds(&alg, &seed).unwrap();
                let inter = all
                    .iter()
                    .filter(|d| seed.is_subset(d))
                    .fold(u64::MAX, |acc, d| acc & d.bits);
                assert_eq!(gen.bits, inter & ElementSet::full(alg.n).bits);
            }
        }
    }

    #[test]
    fn commutative_ds_rejects_non_ds() {
        let alg = diamond();
        let bad = ElementSet::from_elems(4, &[0]);
        assert!(matches!(
            is_commutative_ds(&alg, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn quotient_by_a_top() {
        let alg = diamond();
        let h = ElementSet::from_elems(4, &[1, 3]);
        let q = congruence_of(&alg, &h).unwrap();
        assert_eq!(q.algebra.n, 2);
        // Classes {0, b} and {a, 1}.
        assert_eq!(q.classes, vec![vec![0, 2], vec![1, 3]]);
        assert!(q.algebra.verify_axioms().unwrap().passed());
        assert!(q.algebra.classify().unwrap().is_linear.holds);
    }

    #[test]
    fn trivial_quotients() {
        let alg = diamond();
        let top_only = ElementSet::from_elems(4, &[3]);
        let q = congruence_of(&alg, &top_only).unwrap();
        assert_eq!(q.algebra.n, alg.n);
        let all = ElementSet::full(4);
        let q1 = congruence_of(&alg, &all).unwrap();
        assert_eq!(q1.algebra.n, 1);
    }

    #[test]
    fn quotient_projection_is_homomorphism() {
        let alg = diamond();
        for rec in enumerate_ds(&alg).unwrap() {
            let q = congruence_of(&alg, &rec.set).unwrap();
            for x in 0..alg.n {
                for y in 0..alg.n {
                    assert_eq!(
                        q.projection[alg.meet(x, y)],
                        q.algebra.meet(q.projection[x], q.projection[y])
                    );
                    assert_eq!(
                        q.projection[alg.sim(x, y)],
                        q.algebra.sim(q.projection[x], q.projection[y])
                    );
                    assert_eq!(
                        q.projection[alg.bsim(x, y)],
                        q.algebra.bsim(q.projection[x], q.projection[y])
                    );
                }
            }
            assert_eq!(q.projection[alg.top], q.algebra.top);
            // Class of top recovers H.
            let top_class =
                ElementSet::from_elems(alg.n, &q.classes[q.algebra.top]);
            assert_eq!(top_class, rec.set);
        }
    }

    #[test]
    fn congruence_rejects_non_normal_input() {
        let alg = diamond();
        // {0} is not even a DS.
        let bad = ElementSet::from_elems(4, &[0]);
        assert!(matches!(congruence_of(&alg, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn quotient_commutativity_theorem_on_fixtures() {
        for alg in [diamond(), point(), chain(4)] {
            assert!(check_quotient_commutativity_theorem(&alg).unwrap().passed());
        }
    }

    #[test]
    fn consequences_suite_on_fixtures() {
        for alg in [diamond(), point(), chain(5)] {
            let r = ds_consequences_suite(&alg).unwrap();
            assert!(r.passed(), "violations: {:?}", r.violations);
        }
    }

    #[test]
    fn commutative_iff_top_singleton_commutative() {
        for alg in [diamond(), chain(3), point()] {
            let com = alg.commutativity_flag().holds;
            let top_only = ElementSet::from_elems(alg.n, &[alg.top]);
            assert_eq!(com, is_commutative_ds(&alg, &top_only).unwrap());
            let all_cds = enumerate_ds(&alg)
                .unwrap()
                .iter()
                .all(|r| r.is_commutative);
            assert_eq!(com, all_cds);
        }
    }
}
