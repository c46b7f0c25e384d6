//! Measures, measure-morphisms, order-determining systems, and
//! pseudo-valuations, all represented exactly: the solution sets of the
//! defining conditions are rational polyhedral cones computed by double
//! description.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{Elem, FiniteEqAlgebra};
use crate::dd::{int, Constraint, RationalCone, Vect};
use crate::dedsys::{self, ElementSet, QuotientResult};
use crate::error::{Error, Result};
use crate::report::AxiomReport;
use crate::translate::{self, FiniteBckAlgebra};

/// An exact rational-valued function on the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    pub n: usize,
    pub values: Vec<BigRational>,
}

impl RationalFn {
    pub fn new(values: Vec<BigRational>) -> Self {
        RationalFn { n: values.len(), values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![int(0); n])
    }

    #[inline]
    pub fn at(&self, e: Elem) -> &BigRational {
        &self.values[e]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }
}

/// Coefficient vector with the given (element, weight) contributions summed.
fn coeffs(n: usize, terms: &[(Elem, i64)]) -> Vect {
    let mut c = vec![int(0); n];
    for &(e, k) in terms {
        c[e] += int(k);
    }
    c
}

/// Cone of all measures: `m(top) = 0`, `m ≥ 0` pointwise, and for every pair
/// `y ≤ x` the equalities `m(y∼x) = m(x⤙y) = m(y) − m(x)`.
pub fn measure_cone(alg: &FiniteEqAlgebra) -> RationalCone {
    let n = alg.n;
    let mut cs = vec![Constraint::eq(coeffs(n, &[(alg.top, 1)]))];
    for e in 0..n {
        cs.push(Constraint::ge(coeffs(n, &[(e, 1)])));
    }
    for x in 0..n {
        for y in 0..n {
            if alg.leq(y, x) {
                cs.push(Constraint::eq(coeffs(n, &[(alg.sim(y, x), 1), (y, -1), (x, 1)])));
                cs.push(Constraint::eq(coeffs(n, &[(alg.bsim(x, y), 1), (y, -1), (x, 1)])));
            }
        }
    }
    RationalCone::from_constraints(n, cs)
}

pub fn is_measure(alg: &FiniteEqAlgebra, f: &RationalFn) -> bool {
    assert_eq!(f.n, alg.n);
    if !f.is_nonnegative() {
        return false;
    }
    for x in 0..alg.n {
        for y in 0..alg.n {
            if alg.leq(y, x) {
                let diff = f.at(y) - f.at(x);
                if *f.at(alg.sim(y, x)) != diff || *f.at(alg.bsim(x, y)) != diff {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_measure_morphism(alg: &FiniteEqAlgebra, f: &RationalFn) -> bool {
    assert_eq!(f.n, alg.n);
    if !f.is_nonnegative() {
        return false;
    }
    let zero = BigRational::zero();
    for x in 0..alg.n {
        for y in 0..alg.n {
            let rhs = (f.at(y) - f.at(x)).max(zero.clone());
            if *f.at(alg.arrow(x, y)) != rhs || *f.at(alg.squig(x, y)) != rhs {
                return false;
            }
        }
    }
    // Prop 5.4: every measure-morphism is a measure.
    assert!(is_measure(alg, f), "measure-morphism that is not a measure");
    true
}

/// Kernel of a measure; checked to be a commutative deductive system, and a
/// normal one when the algebra is invariant (Props 5.3 and 5.6).
pub fn measure_kernel(alg: &FiniteEqAlgebra, f: &RationalFn) -> Result<ElementSet> {
    if !is_measure(alg, f) {
        return Err(Error::Precondition("not a measure".into()));
    }
    let elems: Vec<Elem> = (0..alg.n).filter(|&e| f.at(e).is_zero()).collect();
    let ker = ElementSet::from_elems(alg.n, &elems);
    assert!(dedsys::is_ds(alg, &ker), "measure kernel is not a deductive system");
    assert!(dedsys::is_commutative_ds(alg, &ker)?, "measure kernel is not commutative");
    if translate::check_invariant(alg)?.holds {
        assert!(dedsys::is_normal_ds(alg, &ker), "measure kernel not normal");
    }
    Ok(ker)
}

/// Quotient of an invariant algebra by the kernel of a measure, with the
/// induced measure on the quotient (Theorem 5.7).
pub fn quotient_by_measure(
    alg: &FiniteEqAlgebra,
    f: &RationalFn,
) -> Result<(QuotientResult, RationalFn)> {
    if !translate::check_invariant(alg)?.holds {
        return Err(Error::Precondition("algebra is not invariant".into()));
    }
    let ker = measure_kernel(alg, f)?;
    let q = dedsys::congruence_of(alg, &ker)?;
    let mut values = Vec::with_capacity(q.algebra.n);
    for class in &q.classes {
        let v = f.at(class[0]).clone();
        if class.iter().any(|&m| *f.at(m) != v) {
            return Err(Error::CongruenceFailure(
                "induced measure not constant on a congruence class".into(),
            ));
        }
        values.push(v);
    }
    let induced = RationalFn::new(values);
    assert!(
        q.algebra.commutativity_flag().holds,
        "quotient by a measure kernel must be commutative"
    );
    assert!(is_measure(&q.algebra, &induced), "induced function is not a measure");
    Ok((q, induced))
}

/// Joint reading of Def. 5.8: the system `fns` determines the order when,
/// for every pair, agreement of all measures forces comparability.
pub fn is_order_determining(
    alg: &FiniteEqAlgebra,
    fns: &[RationalFn],
) -> Result<(bool, Option<(Elem, Elem)>)> {
    for f in fns {
        if !is_measure(alg, f) {
            return Err(Error::Precondition("system contains a non-measure".into()));
        }
    }
    for x in 0..alg.n {
        for y in 0..alg.n {
            if fns.iter().all(|f| f.at(x) >= f.at(y)) && !alg.leq(x, y) {
                return Ok((false, Some((x, y))));
            }
        }
    }
    Ok((true, None))
}

/// Cone of all pseudo-valuations: `φ(1) = 0` and, for each pair, the two
/// linear inequalities of (pv₂); with `commutative`, (cpv₁) and (cpv₂) are
/// added. Nonnegativity is a consequence (Prop 6.2(2)), not a constraint.
pub fn valuation_cone(alg: &FiniteEqAlgebra, commutative: bool) -> RationalCone {
    let n = alg.n;
    let mut cs = vec![Constraint::eq(coeffs(n, &[(alg.top, 1)]))];
    for x in 0..n {
        for y in 0..n {
            cs.push(Constraint::ge(coeffs(n, &[(alg.arrow(x, y), 1), (y, -1), (x, 1)])));
            cs.push(Constraint::ge(coeffs(n, &[(alg.squig(x, y), 1), (y, -1), (x, 1)])));
            if commutative {
                cs.push(Constraint::ge(coeffs(
                    n,
                    &[(alg.arrow(y, x), 1), (alg.sim(x, alg.vee1(x, y)), -1)],
                )));
                cs.push(Constraint::ge(coeffs(
                    n,
                    &[(alg.squig(y, x), 1), (alg.bsim(alg.vee2(x, y), x), -1)],
                )));
            }
        }
    }
    let cone = RationalCone::from_constraints(n, cs);
    for r in cone.rays.iter().chain(&cone.lineality) {
        assert!(
            r.iter().all(|v| !v.is_negative()),
            "valuation cone generator with a negative coordinate"
        );
    }
    cone
}

pub fn is_valuation(alg: &FiniteEqAlgebra, f: &RationalFn) -> bool {
    assert_eq!(f.n, alg.n);
    if !f.at(alg.top).is_zero() {
        return false;
    }
    for x in 0..alg.n {
        for y in 0..alg.n {
            let lhs = f.at(y) - f.at(x);
            if lhs > *f.at(alg.arrow(x, y)) || lhs > *f.at(alg.squig(x, y)) {
                return false;
            }
        }
    }
    true
}

/// (cpv₁)+(cpv₂); checked against the z-quantified (cpv₃)+(cpv₄)
/// characterization (Prop 6.6).
pub fn is_commutative_valuation(alg: &FiniteEqAlgebra, f: &RationalFn) -> bool {
    if !is_valuation(alg, f) {
        return false;
    }
    let mut direct = true;
    'outer: for x in 0..alg.n {
        for y in 0..alg.n {
            if f.at(alg.sim(x, alg.vee1(x, y))) > f.at(alg.arrow(y, x))
                || f.at(alg.bsim(alg.vee2(x, y), x)) > f.at(alg.squig(y, x))
            {
                direct = false;
                break 'outer;
            }
        }
    }
    let mut quantified = true;
    'org: for x in 0..alg.n {
        for y in 0..alg.n {
            let t1 = f.at(alg.sim(x, alg.vee1(x, y)));
            let t2 = f.at(alg.bsim(alg.vee2(x, y), x));
            for z in 0..alg.n {
                let c3 = f.at(alg.bsim(z, alg.meet(alg.arrow(y, x), z))) + f.at(z);
                let c4 = f.at(alg.sim(alg.meet(alg.squig(y, x), z), z)) + f.at(z);
                if *t1 > c3 || *t2 > c4 {
                    quantified = false;
                    break 'org;
                }
            }
        }
    }
    assert_eq!(direct, quantified, "(cpv1)+(cpv2) vs (cpv3)+(cpv4) disagree");
    direct
}

/// Kernel of a pseudo-valuation; checked to be a deductive system (Prop 6.4)
/// and a commutative one for commutative valuations (Prop 6.7).
pub fn valuation_kernel(alg: &FiniteEqAlgebra, f: &RationalFn) -> Result<ElementSet> {
    if !is_valuation(alg, f) {
        return Err(Error::Precondition("not a pseudo-valuation".into()));
    }
    let elems: Vec<Elem> = (0..alg.n).filter(|&e| f.at(e).is_zero()).collect();
    let ker = ElementSet::from_elems(alg.n, &elems);
    assert!(dedsys::is_ds(alg, &ker), "valuation kernel is not a deductive system");
    if is_commutative_valuation(alg, f) {
        assert!(
            dedsys::is_commutative_ds(alg, &ker)?,
            "commutative valuation kernel is not a commutative deductive system"
        );
    }
    Ok(ker)
}

/// Strict refinement (pv₃): the kernel is exactly `{top}`.
pub fn is_strict_valuation(alg: &FiniteEqAlgebra, f: &RationalFn) -> Result<bool> {
    let ker = valuation_kernel(alg, f)?;
    Ok(ker == ElementSet::from_elems(alg.n, &[alg.top]))
}

/// The Example-6.3 step function: 0 on the deductive system, `a` off it.
pub fn ds_valuation(alg: &FiniteEqAlgebra, d: &ElementSet, a: BigRational) -> Result<RationalFn> {
    if !dedsys::is_ds(alg, d) {
        return Err(Error::Precondition("not a deductive system".into()));
    }
    if a.is_negative() {
        return Err(Error::InvalidInput("step value must be nonnegative".into()));
    }
    Ok(RationalFn::new(
        (0..alg.n)
            .map(|e| if d.contains(e) { int(0) } else { a.clone() })
            .collect(),
    ))
}

/// Generators of a cone as functions: rays, lineality in both directions, and
/// the sum of all rays (an interior point of the pointed part).
pub fn generator_fns(cone: &RationalCone) -> Vec<RationalFn> {
    let mut out: Vec<RationalFn> = cone
        .rays
        .iter()
        .map(|r| RationalFn::new(r.clone()))
        .collect();
    for v in &cone.lineality {
        out.push(RationalFn::new(v.clone()));
        out.push(RationalFn::new(v.iter().map(|x| -x).collect()));
    }
    if !cone.rays.is_empty() {
        let mut sum = vec![BigRational::zero(); cone.dim];
        for r in &cone.rays {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += x;
            }
        }
        out.push(RationalFn::new(sum));
    }
    out
}

/// Prop 5.2, Prop 5.3, Prop 5.6, Theorem 5.7, and Prop 5.10, checked over the
/// measure-cone generators.
pub fn measure_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let cone = measure_cone(alg);
    let gens = generator_fns(&cone);
    let invariant = translate::check_invariant(alg)?.holds;
    for m in &gens {
        if !is_measure(alg, m) {
            r.record("Def 5.1", &[], "cone generator fails the measure axioms");
            continue;
        }
        if !m.at(alg.top).is_zero() {
            r.record("Prop 5.2(1)", &[alg.top], "");
        }
        for x in 0..alg.n {
            for y in 0..alg.n {
                if alg.leq(x, y) && m.at(x) < m.at(y) {
                    r.record("Prop 5.2(2)", &[x, y], "");
                }
                if m.at(alg.vee1(x, y)) != m.at(alg.vee1(y, x))
                    || m.at(alg.vee2(x, y)) != m.at(alg.vee2(y, x))
                {
                    r.record("Prop 5.2(3)", &[x, y], "");
                }
                if m.at(alg.vee1(x, y)) != m.at(alg.vee2(y, x)) {
                    r.record("Prop 5.2(4)", &[x, y], "");
                }
                if m.at(alg.arrow(x, y)) != m.at(alg.squig(x, y)) {
                    r.record("Prop 5.2(5)", &[x, y], "");
                }
                if alg.leq(y, x)
                    && (m.at(alg.vee1(x, y)) != m.at(x) || m.at(alg.vee2(x, y)) != m.at(x))
                {
                    r.record("Prop 5.3(1)", &[x, y], "");
                }
            }
        }
        match measure_kernel(alg, m) {
            Ok(ker) => {
                if !dedsys::is_ds(alg, &ker) {
                    r.record("Prop 5.3(2)", &[], ker.render(alg));
                }
                if invariant && !dedsys::is_normal_ds(alg, &ker) {
                    r.record("Prop 5.3(3)", &[], ker.render(alg));
                }
                if !dedsys::is_commutative_ds(alg, &ker)? {
                    r.record("Prop 5.6", &[], ker.render(alg));
                }
            }
            Err(e) => r.record("Prop 5.3(2)", &[], e.to_string()),
        }
        if invariant {
            match quotient_by_measure(alg, m) {
                Ok((q, _)) => {
                    if !q.algebra.commutativity_flag().holds {
                        r.record("Theorem 5.7", &[], "quotient not commutative");
                    }
                }
                Err(e) => r.record("Theorem 5.7", &[], e.to_string()),
            }
        }
    }
    let (od, _) = is_order_determining(alg, &gens)?;
    if od && !alg.commutativity_flag().holds {
        r.record("Prop 5.10", &[], "order-determining system on a non-commutative algebra");
    }
    Ok(r)
}

/// Prop 6.2, Example 6.3, Props 6.4–6.8 over the valuation-cone generators
/// and the deductive-system step valuations.
pub fn valuation_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let cone = valuation_cone(alg, false);
    let cone_c = valuation_cone(alg, true);
    let mut fns = generator_fns(&cone);
    for rec in dedsys::enumerate_ds(alg)? {
        for a in [int(1), int(2), crate::dd::ratio(7, 2)] {
            let f = ds_valuation(alg, &rec.set, a)?;
            if !is_valuation(alg, &f) {
                r.record("Example 6.3", &rec.set.iter().collect::<Vec<_>>(), "");
            }
            fns.push(f);
        }
    }
    for f in &fns {
        if !is_valuation(alg, f) {
            r.record("Def 6.1", &[], "cone generator fails (pv1)/(pv2)");
            continue;
        }
        for x in 0..alg.n {
            if f.at(x).is_negative() {
                r.record("Prop 6.2(2)", &[x], "");
            }
            for y in 0..alg.n {
                if alg.leq(x, y) && f.at(x) < f.at(y) {
                    r.record("Prop 6.2(1)", &[x, y], "");
                }
                for z in 0..alg.n {
                    let h1 = alg.sim(alg.meet(alg.squig(y, x), z), z) == alg.top;
                    let h2 = alg.bsim(z, alg.meet(alg.arrow(y, x), z)) == alg.top;
                    if (h1 || h2) && *f.at(x) > f.at(y) + f.at(z) {
                        r.record("Prop 6.2(3)", &[x, y, z], "");
                    }
                }
            }
        }
        match valuation_kernel(alg, f) {
            Ok(ker) => {
                if !dedsys::is_ds(alg, &ker) {
                    r.record("Prop 6.4", &[], ker.render(alg));
                }
                if is_commutative_valuation(alg, f) && !dedsys::is_commutative_ds(alg, &ker)? {
                    r.record("Prop 6.7", &[], ker.render(alg));
                }
            }
            Err(e) => r.record("Prop 6.4", &[], e.to_string()),
        }
    }
    if alg.commutativity_flag().holds && !cone.same_cone(&cone_c) {
        r.record("Prop 6.8", &[], "commutative-valuation cone differs on a commutative algebra");
    }
    Ok(r)
}

/// BCK-side measure cone of a pseudo BCK-meet-semilattice: same recipe with
/// →/⇝ in place of ∼/⤙.
pub fn bck_measure_cone(b: &FiniteBckAlgebra) -> RationalCone {
    let n = b.n;
    let mut cs = vec![Constraint::eq(coeffs(n, &[(b.top, 1)]))];
    for e in 0..n {
        cs.push(Constraint::ge(coeffs(n, &[(e, 1)])));
    }
    for x in 0..n {
        for y in 0..n {
            if b.leq(y, x) {
                cs.push(Constraint::eq(coeffs(n, &[(b.arrow(x, y), 1), (y, -1), (x, 1)])));
                cs.push(Constraint::eq(coeffs(n, &[(b.squig(x, y), 1), (y, -1), (x, 1)])));
            }
        }
    }
    RationalCone::from_constraints(n, cs)
}

pub fn bck_valuation_cone(b: &FiniteBckAlgebra) -> RationalCone {
    let n = b.n;
    let mut cs = vec![Constraint::eq(coeffs(n, &[(b.top, 1)]))];
    for x in 0..n {
        for y in 0..n {
            cs.push(Constraint::ge(coeffs(n, &[(b.arrow(x, y), 1), (y, -1), (x, 1)])));
            cs.push(Constraint::ge(coeffs(n, &[(b.squig(x, y), 1), (y, -1), (x, 1)])));
        }
    }
    RationalCone::from_constraints(n, cs)
}

pub fn is_bck_measure_morphism(b: &FiniteBckAlgebra, f: &RationalFn) -> bool {
    assert_eq!(f.n, b.n);
    if !f.is_nonnegative() {
        return false;
    }
    let zero = BigRational::zero();
    for x in 0..b.n {
        for y in 0..b.n {
            let rhs = (f.at(y) - f.at(x)).max(zero.clone());
            if *f.at(b.arrow(x, y)) != rhs || *f.at(b.squig(x, y)) != rhs {
                return false;
            }
        }
    }
    true
}

/// Theorems 5.11/5.13, Corollaries 5.12/5.14, and Remark 6.9: measure and
/// valuation cones transported along Ψ and Φ.
pub fn translation_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let b = translate::psi(alg)?;
    let back = translate::phi(&b)?;
    let invariant = translate::check_invariant(alg)?.holds;
    let linear = b.is_linear();

    let mc = measure_cone(alg);
    let mc_bck = bck_measure_cone(&b);
    let mc_back = measure_cone(&back);
    if !mc.included_in(&mc_bck) {
        r.record("Theorem 5.11(1)", &[], "a measure generator is not a BCK measure");
    }
    if !mc_bck.included_in(&mc_back) {
        r.record("Theorem 5.11(2)", &[], "a BCK measure generator fails on Φ(B)");
    }
    if invariant && !mc.same_cone(&mc_bck) {
        r.record("Cor 5.12", &[], "measure cones differ on an invariant algebra");
    }

    for f in generator_fns(&mc) {
        if is_measure_morphism(alg, &f) && !is_bck_measure_morphism(&b, &f) {
            r.record("Theorem 5.13(1)", &[], "morphism lost under Ψ");
        }
    }
    for f in generator_fns(&mc_bck) {
        if linear && is_bck_measure_morphism(&b, &f) && !is_measure_morphism(&back, &f) {
            r.record("Theorem 5.13(2)", &[], "morphism lost under Φ");
        }
    }
    if invariant && linear {
        for f in generator_fns(&mc) {
            if is_measure_morphism(alg, &f) != is_bck_measure_morphism(&b, &f) {
                r.record("Cor 5.14", &[], "morphism status differs across Ψ");
            }
        }
    }

    let vc = valuation_cone(alg, false);
    let vc_bck = bck_valuation_cone(&b);
    let vc_back = valuation_cone(&back, false);
    if !vc.included_in(&vc_bck) {
        r.record("Rem 6.9", &[], "a pseudo-valuation generator is not a BCK pseudo-valuation");
    }
    if !vc_bck.included_in(&vc_back) {
        r.record("Rem 6.9", &[], "a BCK pseudo-valuation generator fails on Φ(B)");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::algebra::fixtures::{diamond, point};
    use crate::dd::{int_vec, ratio};

    #[test]
    fn diamond_measure_cone_matches_known_rays() {
        let cone = measure_cone(&diamond());
        assert!(cone.lineality.is_empty());
        assert_eq!(cone.rays, vec![int_vec(&[1, 0, 1, 0]), int_vec(&[1, 1, 0, 0])]);
        let alg = diamond();
        for f in generator_fns(&cone) {
            assert!(is_measure(&alg, &f));
        }
        // The morphism identity holds on the extreme rays; it fails for
        // interior points such as (2,1,1,0), where m(a∧b) < max{m(a),m(b)}.
        for r in &cone.rays {
            assert!(is_measure_morphism(&alg, &RationalFn::new(r.clone())));
        }
        assert!(!is_measure_morphism(&alg, &RationalFn::from_ints(&[2, 1, 1, 0])));
    }

    #[test]
    fn point_measure_cone_is_zero() {
        assert!(measure_cone(&point()).is_zero_cone());
    }

    #[test]
    fn measure_membership_examples() {
        let alg = diamond();
        assert!(is_measure(&alg, &RationalFn::from_ints(&[1, 1, 0, 0])));
        assert!(is_measure_morphism(&alg, &RationalFn::from_ints(&[1, 1, 0, 0])));
        assert!(!is_measure(&alg, &RationalFn::from_ints(&[1, 0, 0, 0])));
        assert!(is_measure(&alg, &RationalFn::zero(4)));
        assert!(is_measure_morphism(&alg, &RationalFn::zero(4)));
        // The general family u_{α,β} = (α, β, α−β, 0) with α ≥ β ≥ 0.
        let u = RationalFn::new(vec![ratio(7, 2), int(1), ratio(5, 2), int(0)]);
        assert!(is_measure(&alg, &u));
        assert!(measure_cone(&alg).contains(&u.values));
        assert!(!measure_cone(&alg).contains(&int_vec(&[1, 2, -1, 0])));
    }

    #[test]
    fn kernels() {
        let alg = diamond();
        let k = measure_kernel(&alg, &RationalFn::from_ints(&[1, 1, 0, 0])).unwrap();
        assert_eq!(k.render(&alg), "{b,1}");
        let k = measure_kernel(&alg, &RationalFn::from_ints(&[1, 0, 1, 0])).unwrap();
        assert_eq!(k.render(&alg), "{a,1}");
        let k = measure_kernel(&alg, &RationalFn::zero(4)).unwrap();
        assert_eq!(k, ElementSet::full(4));
        assert!(matches!(
            measure_kernel(&alg, &RationalFn::from_ints(&[1, 0, 0, 0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn quotients_by_measures() {
        let alg = diamond();
        let (q, m) = quotient_by_measure(&alg, &RationalFn::from_ints(&[1, 1, 0, 0])).unwrap();
        assert_eq!(q.algebra.n, 2);
        assert_eq!(q.classes, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(m, RationalFn::from_ints(&[1, 0]));

        let (q, m) = quotient_by_measure(&alg, &RationalFn::zero(4)).unwrap();
        assert_eq!(q.algebra.n, 1);
        assert_eq!(m, RationalFn::zero(1));

        let c3 = chain(3);
        let counting = RationalFn::from_ints(&[2, 1, 0]);
        assert!(is_measure(&c3, &counting));
        let (q, m) = quotient_by_measure(&c3, &counting).unwrap();
        assert_eq!(q.algebra.n, 3);
        assert_eq!(m, counting);
    }

    #[test]
    fn order_determining_systems() {
        let alg = diamond();
        let rays: Vec<RationalFn> = measure_cone(&alg)
            .rays
            .iter()
            .map(|r| RationalFn::new(r.clone()))
            .collect();
        assert_eq!(is_order_determining(&alg, &rays).unwrap(), (true, None));
        let (od, w) = is_order_determining(&alg, &[RationalFn::zero(4)]).unwrap();
        assert!(!od);
        assert!(w.is_some());
        assert!(is_order_determining(&alg, &[RationalFn::from_ints(&[1, 0, 0, 0])]).is_err());
    }

    #[test]
    fn diamond_valuation_cone() {
        let alg = diamond();
        let cone = valuation_cone(&alg, false);
        assert!(cone.contains(&int_vec(&[2, 0, 2, 0])));
        assert!(cone.contains(&int_vec(&[0, 0, 0, 0])));
        // Prop 6.8: the algebra is commutative, so the flagged cone agrees.
        assert!(cone.same_cone(&valuation_cone(&alg, true)));
    }

    #[test]
    fn valuation_membership_and_kernels() {
        let alg = diamond();
        let f = RationalFn::from_ints(&[2, 0, 2, 0]);
        assert!(is_valuation(&alg, &f));
        assert!(is_commutative_valuation(&alg, &f));
        assert_eq!(valuation_kernel(&alg, &f).unwrap().render(&alg), "{a,1}");
        assert!(!is_strict_valuation(&alg, &f).unwrap());
        assert_eq!(
            valuation_kernel(&alg, &RationalFn::zero(4)).unwrap(),
            ElementSet::full(4)
        );
        // Strictly positive off top: kernel {1}.
        let g = RationalFn::from_ints(&[3, 1, 2, 0]);
        if is_valuation(&alg, &g) {
            assert!(is_strict_valuation(&alg, &g).unwrap());
        }
        assert!(!is_valuation(&alg, &RationalFn::from_ints(&[0, 0, 0, 1])));
    }

    #[test]
    fn ds_valuations_are_valuations() {
        let alg = diamond();
        for rec in dedsys::enumerate_ds(&alg).unwrap() {
            for a in [int(1), int(2), ratio(7, 2)] {
                let f = ds_valuation(&alg, &rec.set, a).unwrap();
                assert!(is_valuation(&alg, &f));
                assert_eq!(valuation_kernel(&alg, &f).unwrap(), rec.set);
            }
        }
        let bad = ElementSet::from_elems(4, &[0]);
        assert!(ds_valuation(&alg, &bad, int(1)).is_err());
        let top_only = ElementSet::from_elems(4, &[3]);
        assert!(ds_valuation(&alg, &top_only, int(-1)).is_err());
    }

    #[test]
    fn suites_pass_on_fixtures() {
        for alg in [diamond(), point(), chain(3), chain(4)] {
            let m = measure_suite(&alg).unwrap();
            assert!(m.passed(), "measure suite: {:?}", m.violations);
            let v = valuation_suite(&alg).unwrap();
            assert!(v.passed(), "valuation suite: {:?}", v.violations);
            let t = translation_suite(&alg).unwrap();
            assert!(t.passed(), "translation suite: {:?}", t.violations);
        }
    }

    #[test]
    fn measure_cone_grid_oracle() {
        // Membership by constraint evaluation agrees with membership in the
        // generator-regenerated cone on a grid with denominators ≤ 4.
        let cone = measure_cone(&diamond());
        let regen = cone.regenerated();
        let vals: Vec<BigRational> = vec![
            int(-1),
            int(0),
            ratio(1, 4),
            ratio(1, 3),
            ratio(1, 2),
            ratio(3, 4),
            int(1),
            ratio(3, 2),
            int(2),
        ];
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    for d in &vals {
                        let v = vec![a.clone(), b.clone(), c.clone(), d.clone()];
                        assert_eq!(cone.contains(&v), regen.contains(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn chain_measure_cone_is_one_dimensional() {
        // On chain(k) the measure equations force m(i) = (top − i)·m(top−1).
        let c4 = chain(4);
        let cone = measure_cone(&c4);
        assert!(cone.lineality.is_empty());
        assert_eq!(
            cone.rays,
            vec![vec![int(1), ratio(2, 3), ratio(1, 3), int(0)]]
        );
    }
}
