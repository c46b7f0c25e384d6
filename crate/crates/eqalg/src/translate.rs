//! Pseudo BCK-meet-semilattices and the two translations between them and
//! pseudo equality algebras, together with the invariance and round-trip
//! checks.

use crate::algebra::{Elem, FiniteEqAlgebra, Flag};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// A finite pseudo BCK-meet-semilattice given by explicit tables.
///
/// The order is induced by the implications: `x <= y` iff `arrow(x, y) = 1`.
/// The meet table must agree with that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBckAlgebra {
    pub n: usize,
    pub names: Vec<String>,
    pub top: Elem,
    pub meet: Vec<Vec<Elem>>,
    pub arrow: Vec<Vec<Elem>>,
    pub squig: Vec<Vec<Elem>>,
}

impl FiniteBckAlgebra {
    pub fn check_structure(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Structure("carrier must be nonempty".into()));
        }
        if self.names.len() != self.n || self.top >= self.n {
            return Err(Error::Structure("bad names or top index".into()));
        }
        for (what, table) in [
            ("meet", &self.meet),
            ("arrow", &self.arrow),
            ("squig", &self.squig),
        ] {
            if table.len() != self.n
                || table.iter().any(|r| r.len() != self.n || r.iter().any(|&v| v >= self.n))
            {
                return Err(Error::Structure(format!("malformed {what} table")));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x][y]
    }
    #[inline]
    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow[x][y]
    }
    #[inline]
    pub fn squig(&self, x: Elem, y: Elem) -> Elem {
        self.squig[x][y]
    }

    /// Order induced by the implications.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.arrow[x][y] == self.top
    }

    /// Exhaustive check of B1′–B6′ plus agreement of the meet table with the
    /// induced order, and the Lemma 2.9 consequence suite as a cross-check.
    pub fn verify_bck(&self) -> Result<AxiomReport> {
        self.check_structure()?;
        let n = self.n;
        let top = self.top;
        let mut r = AxiomReport::new();

        'b1: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let inner = self.squig(self.arrow(y, z), self.arrow(x, z));
                    if self.squig(self.arrow(x, y), inner) != top {
                        r.record("B1'", &[x, y, z], "");
                        break 'b1;
                    }
                }
            }
        }
        'b2: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let inner = self.arrow(self.squig(y, z), self.squig(x, z));
                    if self.arrow(self.squig(x, y), inner) != top {
                        r.record("B2'", &[x, y, z], "");
                        break 'b2;
                    }
                }
            }
        }
        for x in 0..n {
            if self.arrow(top, x) != x {
                r.record("B3'", &[x], "");
                break;
            }
        }
        for x in 0..n {
            if self.squig(top, x) != x {
                r.record("B4'", &[x], "");
                break;
            }
        }
        for x in 0..n {
            if self.arrow(x, top) != top {
                r.record("B5'", &[x], "");
                break;
            }
        }
        'b6: for x in 0..n {
            for y in 0..n {
                if x != y && self.arrow(x, y) == top && self.arrow(y, x) == top {
                    r.record("B6'", &[x, y], "antisymmetry fails");
                    break 'b6;
                }
            }
        }
        // The two implications must induce the same order.
        'ord: for x in 0..n {
            for y in 0..n {
                if (self.arrow(x, y) == top) != (self.squig(x, y) == top) {
                    r.record("ORD", &[x, y], "arrow and squig orders disagree");
                    break 'ord;
                }
            }
        }
        // Meet table must give greatest lower bounds of the induced order.
        'meet: for x in 0..n {
            for y in 0..n {
                let m = self.meet(x, y);
                if !(self.leq(m, x) && self.leq(m, y)) {
                    r.record("MEET", &[x, y], "meet is not a lower bound");
                    break 'meet;
                }
                for z in 0..n {
                    if self.leq(z, x) && self.leq(z, y) && !self.leq(z, m) {
                        r.record("MEET", &[x, y, z], "meet is not the greatest lower bound");
                        break 'meet;
                    }
                }
            }
        }

        if r.passed() {
            r.absorb(self.lemma_2_9_suite());
        }
        Ok(r)
    }

    /// Lemma 2.9 consequences; theorems on any valid structure.
    fn lemma_2_9_suite(&self) -> AxiomReport {
        let n = self.n;
        let mut r = AxiomReport::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.leq(x, y)
                        && !(self.leq(self.arrow(z, x), self.arrow(z, y))
                            && self.leq(self.squig(z, x), self.squig(z, y)))
                    {
                        r.record("L2.9(1)", &[x, y, z], "");
                    }
                    if self.leq(x, y)
                        && !(self.leq(self.arrow(y, z), self.arrow(x, z))
                            && self.leq(self.squig(y, z), self.squig(x, z)))
                    {
                        r.record("L2.9(2)", &[x, y, z], "");
                    }
                    if !(self
                        .leq(self.arrow(x, y), self.arrow(self.arrow(z, x), self.arrow(z, y)))
                        && self
                            .leq(self.squig(x, y), self.squig(self.squig(z, x), self.squig(z, y))))
                    {
                        r.record("L2.9(3)", &[x, y, z], "");
                    }
                    if self.arrow(x, self.squig(y, z)) != self.squig(y, self.arrow(x, z))
                        || self.squig(x, self.arrow(y, z)) != self.arrow(y, self.squig(x, z))
                    {
                        r.record("L2.9(4)", &[x, y, z], "");
                    }
                }
                if !(self.leq(x, self.arrow(y, x)) && self.leq(x, self.squig(y, x))) {
                    r.record("L2.9(5)", &[x, y], "");
                }
            }
        }
        r
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.verify_bck()?;
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "not a pseudo BCK-meet-semilattice: {} violated",
                report.violations[0].label
            )));
        }
        Ok(())
    }

    /// The pseudo-contraction condition, for both implications.
    pub fn check_pc(&self) -> Result<Flag> {
        self.require_valid()?;
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let xz = self.meet(x, z);
                    let yz = self.meet(y, z);
                    if !(self.leq(self.arrow(x, y), self.arrow(xz, yz))
                        && self.leq(self.squig(x, y), self.squig(xz, yz)))
                    {
                        return Ok(Flag::fail(vec![x, y, z]));
                    }
                }
            }
        }
        Ok(Flag::pass())
    }

    /// The pseudo-distributivity condition, for both implications.
    pub fn check_pd(&self) -> Result<Flag> {
        self.require_valid()?;
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let yz = self.meet(y, z);
                    if self.arrow(x, yz) != self.meet(self.arrow(x, y), self.arrow(x, z))
                        || self.squig(x, yz) != self.meet(self.squig(x, y), self.squig(x, z))
                    {
                        return Ok(Flag::fail(vec![x, y, z]));
                    }
                }
            }
        }
        Ok(Flag::pass())
    }

    /// Commutativity on the BCK side:
    /// `(x→y)⇝y = (y→x)⇝x` and `(x⇝y)→y = (y⇝x)→x`.
    pub fn check_bck_commutative(&self) -> Result<Flag> {
        self.require_valid()?;
        for x in 0..self.n {
            for y in 0..self.n {
                if self.squig(self.arrow(x, y), y) != self.squig(self.arrow(y, x), x)
                    || self.arrow(self.squig(x, y), y) != self.arrow(self.squig(y, x), x)
                {
                    return Ok(Flag::fail(vec![x, y]));
                }
            }
        }
        Ok(Flag::pass())
    }

    /// Linearity of the induced order.
    pub fn is_linear(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }
}

/// Ψ: derive the implication tables of a pseudo equality algebra.
///
/// The result is asserted to be a valid pseudo BCK(pC)-meet-semilattice.
pub fn psi(alg: &FiniteEqAlgebra) -> Result<FiniteBckAlgebra> {
    let report = alg.verify_axioms()?;
    if !report.passed() {
        return Err(Error::InvalidInput(
            "psi requires a valid pseudo equality algebra".into(),
        ));
    }
    let n = alg.n;
    let mut arrow = vec![vec![0; n]; n];
    let mut squig = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            arrow[x][y] = alg.arrow(x, y);
            squig[x][y] = alg.squig(x, y);
        }
    }
    let b = FiniteBckAlgebra {
        n,
        names: alg.names.clone(),
        top: alg.top,
        meet: alg.meet.clone(),
        arrow,
        squig,
    };
    let br = b.verify_bck()?;
    assert!(br.passed(), "psi image violates BCK axioms: {:?}", br.violations);
    let pc = b.check_pc()?;
    assert!(pc.holds, "psi image violates (pC) at {:?}", pc.witness);
    Ok(b)
}

/// Φ: rebuild an equality structure from a pC structure via
/// `x ∼ y = y → x`, `x ⤙ y = x ⇝ y`.
///
/// Rejects non-pC inputs: the translation is only claimed for them.
pub fn phi(b: &FiniteBckAlgebra) -> Result<FiniteEqAlgebra> {
    let report = b.verify_bck()?;
    if !report.passed() {
        return Err(Error::InvalidInput(
            "phi requires a valid pseudo BCK-meet-semilattice".into(),
        ));
    }
    let pc = b.check_pc()?;
    if !pc.holds {
        return Err(Error::Precondition(format!(
            "phi requires the (pC) condition; it fails at {:?}",
            pc.witness.unwrap_or_default()
        )));
    }
    let n = b.n;
    let mut sim = vec![vec![0; n]; n];
    let mut bsim = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            sim[x][y] = b.arrow(y, x);
            bsim[x][y] = b.squig(x, y);
        }
    }
    let alg = FiniteEqAlgebra {
        n,
        names: b.names.clone(),
        top: b.top,
        meet: b.meet.clone(),
        sim,
        bsim,
    };
    let ar = alg.verify_axioms()?;
    assert!(ar.passed(), "phi image violates A1–A7: {:?}", ar.violations);
    Ok(alg)
}

/// Invariance check via the equational criterion, cross-checked against the
/// round-trip table comparison `phi(psi(alg)) = alg`.
pub fn check_invariant(alg: &FiniteEqAlgebra) -> Result<Flag> {
    let report = alg.verify_axioms()?;
    if !report.passed() {
        return Err(Error::InvalidInput("check_invariant needs a valid algebra".into()));
    }
    let flag = alg.invariance_flag();
    let roundtrip = phi(&psi(alg)?)?;
    assert_eq!(
        flag.holds,
        roundtrip == *alg,
        "equational invariance disagrees with the round-trip comparison"
    );
    Ok(flag)
}

/// Theorem 2.12 round-trip identities and Prop 2.10, evaluated on a single
/// algebra and its Ψ-image.
pub fn roundtrip_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let b = psi(alg)?;
    let back = phi(&b)?;
    if psi(&back)? != b {
        r.record("Theorem 2.12(1)", &[], "psi∘phi∘psi differs from psi");
    }
    if psi(&phi(&b)?)? != b {
        r.record("Theorem 2.12(2)", &[], "psi∘phi is not the identity on the pC image");
    }
    let invariant = alg.invariance_flag();
    if invariant.holds != (back == *alg) {
        r.record(
            "Theorem 2.12(3)",
            &invariant.witness.unwrap_or_default(),
            "equational invariance disagrees with phi∘psi table equality",
        );
    }
    if b.check_pd()?.holds && !b.check_pc()?.holds {
        r.record("Prop 2.10", &[], "(pD) holds but (pC) fails");
    }
    Ok(r)
}

/// Clause (b) of Theorem 3.7:
/// `x∧y∼x = y ∼ ((x∧y∼y) ⤙ x)` and `x⤙x∧y = (x ∼ (y⤙x∧y)) ⤙ y`.
fn theorem_3_7_b(alg: &FiniteEqAlgebra) -> Flag {
    for x in 0..alg.n {
        for y in 0..alg.n {
            if alg.arrow(x, y) != alg.sim(y, alg.bsim(alg.arrow(y, x), x))
                || alg.squig(x, y) != alg.bsim(alg.sim(x, alg.squig(y, x)), y)
            {
                return Flag::fail(vec![x, y]);
            }
        }
    }
    Flag::pass()
}

/// Clause (c) of Theorem 3.7: `x ≤ y` implies `y = (x∼y)⤙x = x∼(y⤙x)`.
fn theorem_3_7_c(alg: &FiniteEqAlgebra) -> Flag {
    for x in 0..alg.n {
        for y in 0..alg.n {
            if alg.leq(x, y)
                && (alg.bsim(alg.sim(x, y), x) != y || alg.sim(x, alg.bsim(y, x)) != y)
            {
                return Flag::fail(vec![x, y]);
            }
        }
    }
    Flag::pass()
}

/// The §3 theorem suite: the Theorem 3.7 three-way equivalence, Prop 3.2,
/// Cor 3.3, Prop 3.5, Prop 3.8 and Rem 3.6, evaluated on one algebra.
pub fn commutativity_suite(alg: &FiniteEqAlgebra) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let commutative = alg.commutativity_flag();
    let b37b = theorem_3_7_b(alg);
    let b37c = theorem_3_7_c(alg);
    if commutative.holds != b37b.holds {
        r.record(
            "Theorem 3.7",
            &b37b.witness.or(commutative.witness.clone()).unwrap_or_default(),
            "(a) and (b) disagree",
        );
    }
    if commutative.holds != b37c.holds {
        r.record(
            "Theorem 3.7",
            &b37c.witness.or(commutative.witness.clone()).unwrap_or_default(),
            "(a) and (c) disagree",
        );
    }

    let invariant = alg.invariance_flag();
    let b = psi(alg)?;
    let bck_commutative = b.check_bck_commutative()?;
    if invariant.holds && commutative.holds != bck_commutative.holds {
        r.record(
            "Prop 3.2",
            &bck_commutative.witness.unwrap_or_default(),
            "commutativity is not preserved across Ψ on an invariant algebra",
        );
    }

    if commutative.holds {
        if !alg.lattice_flag().holds || !alg.distributivity_flag().holds {
            r.record("Cor 3.3", &[], "commutative but not a distributive lattice");
        }
        if invariant.holds && !alg.symmetry_flag().holds {
            r.record("Prop 3.5", &[], "finite invariant commutative but not symmetric");
        }
        if !bck_commutative.holds {
            r.record("Prop 3.8(1)", &[], "Ψ-image of a commutative algebra is not commutative");
        }
    }
    if bck_commutative.holds && !phi(&b)?.commutativity_flag().holds {
        r.record("Prop 3.8(2)", &[], "Φ of a commutative pC structure is not commutative");
    }
    if alg.symmetry_flag().holds && b.arrow != b.squig {
        r.record("Rem 3.6", &[], "symmetric algebra with distinct Ψ implication tables");
    }
    Ok(r)
}
