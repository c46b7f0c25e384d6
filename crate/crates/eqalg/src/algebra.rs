//! Finite pseudo equality algebras: operation tables, the defining axioms
//! A1–A7, the derived implications, join candidates, order and lattice
//! classification, and the identity suite (Props 2.2–2.8).

use crate::error::{Error, Result};
use crate::report::AxiomReport;

pub type Elem = usize;

/// A finite pseudo equality algebra given by explicit operation tables.
///
/// Elements are dense indices `0..n`. `top` is an index, not necessarily the
/// last one. The order is derived from `meet` only: `x <= y` iff
/// `meet(x, y) = x`. Values are immutable after construction; every operation
/// here is a pure table lookup or scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteEqAlgebra {
    pub n: usize,
    pub names: Vec<String>,
    pub top: Elem,
    pub meet: Vec<Vec<Elem>>,
    pub sim: Vec<Vec<Elem>>,
    pub bsim: Vec<Vec<Elem>>,
}

/// One classification flag with a counterwitness when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Vec<Elem>>,
}

impl Flag {
    pub fn pass() -> Self {
        Flag { holds: true, witness: None }
    }
    pub fn fail(witness: Vec<Elem>) -> Self {
        Flag { holds: false, witness: Some(witness) }
    }
}

/// Structural classification of a valid pseudo equality algebra.
#[derive(Debug, Clone)]
pub struct Classification {
    pub is_bounded: Flag,
    pub is_lattice: Flag,
    pub is_distributive_lattice: Flag,
    pub is_linear: Flag,
    pub is_invariant: Flag,
    pub is_commutative: Flag,
    pub is_symmetric: Flag,
}

fn check_table(n: usize, table: &[Vec<Elem>], what: &str) -> Result<()> {
    if table.len() != n {
        return Err(Error::Structure(format!(
            "{what} table has {} rows, expected {n}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Structure(format!(
                "{what} table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::Structure(format!(
                    "{what} table entry ({i},{j}) = {v} out of range 0..{n}"
                )));
            }
        }
    }
    Ok(())
}

impl FiniteEqAlgebra {
    /// Validate shapes and ranges only; axiom checking is separate.
    pub fn check_structure(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Structure("carrier must be nonempty".into()));
        }
        if self.names.len() != self.n {
            return Err(Error::Structure(format!(
                "{} names for {} elements",
                self.names.len(),
                self.n
            )));
        }
        if self.top >= self.n {
            return Err(Error::Structure(format!("top index {} out of range", self.top)));
        }
        check_table(self.n, &self.meet, "meet")?;
        check_table(self.n, &self.sim, "sim")?;
        check_table(self.n, &self.bsim, "bsim")?;
        Ok(())
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x][y]
    }
    #[inline]
    pub fn sim(&self, x: Elem, y: Elem) -> Elem {
        self.sim[x][y]
    }
    #[inline]
    pub fn bsim(&self, x: Elem, y: Elem) -> Elem {
        self.bsim[x][y]
    }

    /// The induced order: `x <= y` iff `x ∧ y = x`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet[x][y] == x
    }

    /// Derived implication `x → y = (x ∧ y) ∼ x`.
    #[inline]
    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.sim[self.meet[x][y]][x]
    }

    /// Derived implication `x ⇝ y = x ⤙ (x ∧ y)`.
    #[inline]
    pub fn squig(&self, x: Elem, y: Elem) -> Elem {
        self.bsim[x][self.meet[x][y]]
    }

    /// Join candidate `x ∨₁ y = (x∧y ∼ x) ⤙ y`.
    #[inline]
    pub fn vee1(&self, x: Elem, y: Elem) -> Elem {
        self.bsim[self.sim[self.meet[x][y]][x]][y]
    }

    /// Join candidate `x ∨₂ y = y ∼ (x ⤙ x∧y)`.
    #[inline]
    pub fn vee2(&self, x: Elem, y: Elem) -> Elem {
        self.sim[y][self.bsim[x][self.meet[x][y]]]
    }

    /// All pairs `(x, y)` with `x <= y`.
    pub fn order_relation(&self) -> Vec<(Elem, Elem)> {
        let mut pairs = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.leq(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    /// Least element index, if the algebra is bounded.
    pub fn bottom(&self) -> Option<Elem> {
        (0..self.n).find(|&b| (0..self.n).all(|x| self.leq(b, x)))
    }

    /// Least upper bound of `x` and `y` under the induced order, if it exists.
    pub fn join(&self, x: Elem, y: Elem) -> Option<Elem> {
        let uppers: Vec<Elem> = (0..self.n)
            .filter(|&u| self.leq(x, u) && self.leq(y, u))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&j| uppers.iter().all(|&u| self.leq(j, u)))
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    /// Exhaustive check of axioms A1–A7. Each violated axiom is reported once
    /// with its lexicographically first witness tuple.
    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        self.check_structure()?;
        let n = self.n;
        let mut report = AxiomReport::new();

        // A1: meet-semilattice with top.
        'a1: for x in 0..n {
            for y in 0..n {
                if self.meet(x, y) != self.meet(y, x) {
                    report.record("A1", &[x, y], "meet not commutative");
                    break 'a1;
                }
                for z in 0..n {
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z)) {
                        report.record("A1", &[x, y, z], "meet not associative");
                        break 'a1;
                    }
                }
            }
            if self.meet(x, x) != x {
                report.record("A1", &[x], "meet not idempotent");
                break 'a1;
            }
            if self.meet(x, self.top) != x {
                report.record("A1", &[x], "top is not the greatest element");
                break 'a1;
            }
        }

        // A2: x ∼ x = x ⤙ x = 1.
        for x in 0..n {
            if self.sim(x, x) != self.top || self.bsim(x, x) != self.top {
                report.record("A2", &[x], "x ∼ x or x ⤙ x differs from 1");
                break;
            }
        }

        // A3: x ∼ 1 = 1 ⤙ x = x.
        for x in 0..n {
            if self.sim(x, self.top) != x || self.bsim(self.top, x) != x {
                report.record("A3", &[x], "x ∼ 1 or 1 ⤙ x differs from x");
                break;
            }
        }

        // A4: x <= y <= z implies four monotonicity laws.
        'a4: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !(self.leq(x, y) && self.leq(y, z)) {
                        continue;
                    }
                    let ok = self.leq(self.sim(x, z), self.sim(y, z))
                        && self.leq(self.sim(x, z), self.sim(x, y))
                        && self.leq(self.bsim(z, x), self.bsim(z, y))
                        && self.leq(self.bsim(z, x), self.bsim(y, x));
                    if !ok {
                        report.record("A4", &[x, y, z], "monotonicity on a chain fails");
                        break 'a4;
                    }
                }
            }
        }

        // A5: x ∼ y <= (x∧z) ∼ (y∧z) and x ⤙ y <= (x∧z) ⤙ (y∧z).
        'a5: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let ok = self
                        .leq(self.sim(x, y), self.sim(self.meet(x, z), self.meet(y, z)))
                        && self
                            .leq(self.bsim(x, y), self.bsim(self.meet(x, z), self.meet(y, z)));
                    if !ok {
                        report.record("A5", &[x, y, z], "meet compatibility fails");
                        break 'a5;
                    }
                }
            }
        }

        // A6: x ∼ y <= (z ∼ x) ⤙ (z ∼ y) and x ⤙ y <= (x ⤙ z) ∼ (y ⤙ z).
        'a6: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let ok = self
                        .leq(self.sim(x, y), self.bsim(self.sim(z, x), self.sim(z, y)))
                        && self.leq(self.bsim(x, y), self.sim(self.bsim(x, z), self.bsim(y, z)));
                    if !ok {
                        report.record("A6", &[x, y, z], "mixed congruence law fails");
                        break 'a6;
                    }
                }
            }
        }

        // A7: x ∼ y <= (x ∼ z) ∼ (y ∼ z) and x ⤙ y <= (z ⤙ x) ⤙ (z ⤙ y).
        'a7: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let ok = self
                        .leq(self.sim(x, y), self.sim(self.sim(x, z), self.sim(y, z)))
                        && self.leq(self.bsim(x, y), self.bsim(self.bsim(z, x), self.bsim(z, y)));
                    if !ok {
                        report.record("A7", &[x, y, z], "congruence law fails");
                        break 'a7;
                    }
                }
            }
        }

        Ok(report)
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.verify_axioms()?;
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "not a pseudo equality algebra: {} violated",
                report.violations[0].label
            )));
        }
        Ok(())
    }

    /// Prop 2.13 invariance scan: `x∧y ∼ y = x ∼ y` and `x ⤙ x∧y = x ⤙ y`.
    pub fn invariance_flag(&self) -> Flag {
        for x in 0..self.n {
            for y in 0..self.n {
                let m = self.meet(x, y);
                if self.sim(m, y) != self.sim(x, y) || self.bsim(x, m) != self.bsim(x, y) {
                    return Flag::fail(vec![x, y]);
                }
            }
        }
        Flag::pass()
    }

    /// Both displayed identities of the commutativity definition:
    /// `x ∨₁ y = y ∨₁ x` and `x ∨₂ y = y ∨₂ x`.
    pub fn commutativity_flag(&self) -> Flag {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.vee1(x, y) != self.vee1(y, x) || self.vee2(x, y) != self.vee2(y, x) {
                    return Flag::fail(vec![x, y]);
                }
            }
        }
        Flag::pass()
    }

    /// Symmetry: `x ⤙ y = y ∼ x`.
    pub fn symmetry_flag(&self) -> Flag {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.bsim(x, y) != self.sim(y, x) {
                    return Flag::fail(vec![x, y]);
                }
            }
        }
        Flag::pass()
    }

    pub fn lattice_flag(&self) -> Flag {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.join(x, y).is_none() {
                    return Flag::fail(vec![x, y]);
                }
            }
        }
        Flag::pass()
    }

    pub fn distributivity_flag(&self) -> Flag {
        // Both distributive laws; only meaningful when joins exist.
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let (jyz, jxy, jxz) = match (self.join(y, z), self.join(x, y), self.join(x, z))
                    {
                        (Some(a), Some(b), Some(c)) => (a, b, c),
                        _ => return Flag::fail(vec![x, y, z]),
                    };
                    if self.meet(x, jyz) != self.join(self.meet(x, y), self.meet(x, z)).unwrap_or(self.n)
                    {
                        return Flag::fail(vec![x, y, z]);
                    }
                    match self.join(x, self.meet(y, z)) {
                        Some(j) if j == self.meet(jxy, jxz) => {}
                        _ => return Flag::fail(vec![x, y, z]),
                    }
                }
            }
        }
        Flag::pass()
    }

    pub fn linearity_flag(&self) -> Flag {
        for x in 0..self.n {
            for y in 0..self.n {
                if !self.leq(x, y) && !self.leq(y, x) {
                    return Flag::fail(vec![x, y]);
                }
            }
        }
        Flag::pass()
    }

    /// Classify a valid algebra. Errors if `verify_axioms` does not pass.
    pub fn classify(&self) -> Result<Classification> {
        self.require_valid()?;
        let is_lattice = self.lattice_flag();
        let is_distributive_lattice = if is_lattice.holds {
            self.distributivity_flag()
        } else {
            Flag::fail(is_lattice.witness.clone().unwrap_or_default())
        };
        Ok(Classification {
            is_bounded: match self.bottom() {
                Some(_) => Flag::pass(),
                None => Flag::fail(vec![]),
            },
            is_lattice,
            is_distributive_lattice,
            is_linear: self.linearity_flag(),
            is_invariant: self.invariance_flag(),
            is_commutative: self.commutativity_flag(),
            is_symmetric: self.symmetry_flag(),
        })
    }

    /// Evaluate every clause of Props 2.2–2.8 over all element tuples.
    ///
    /// On a valid algebra these are theorems, so a nonempty report signals an
    /// engine bug rather than a property of the input.
    pub fn identity_suite(&self) -> Result<AxiomReport> {
        self.require_valid()?;
        let n = self.n;
        let top = self.top;
        let mut r = AxiomReport::new();
        let leq = |x: Elem, y: Elem| self.leq(x, y);

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let m = self.meet(x, y);
                    let mz = self.meet(m, z);
                    let xz = self.meet(x, z);
                    // Prop 2.2
                    if !(leq(self.sim(m, x), self.sim(mz, xz))
                        && leq(self.arrow(x, y), self.arrow(xz, y)))
                    {
                        r.record("Prop 2.2(1)", &[x, y, z], "");
                    }
                    if !(leq(self.bsim(x, m), self.bsim(xz, mz))
                        && leq(self.squig(x, y), self.squig(xz, y)))
                    {
                        r.record("Prop 2.2(2)", &[x, y, z], "");
                    }
                    // Prop 2.3, three-variable clauses
                    if self.sim(x, y) == top && !leq(self.sim(z, x), self.sim(z, y)) {
                        r.record("Prop 2.3(4)", &[x, y, z], "");
                    }
                    if self.bsim(x, y) == top && !leq(self.bsim(y, z), self.bsim(x, z)) {
                        r.record("Prop 2.3(4)", &[x, y, z], "");
                    }
                    if !(leq(self.arrow(x, y), self.squig(self.arrow(y, z), self.arrow(x, z)))
                        && leq(self.squig(x, y), self.arrow(self.squig(y, z), self.squig(x, z))))
                    {
                        r.record("Prop 2.3(9)", &[x, y, z], "");
                    }
                    if leq(x, self.arrow(y, z)) != leq(y, self.squig(x, z)) {
                        r.record("Prop 2.3(10)", &[x, y, z], "");
                    }
                    if self.arrow(x, self.squig(y, z)) != self.squig(y, self.arrow(x, z)) {
                        r.record("Prop 2.3(11)", &[x, y, z], "");
                    }
                    if !(leq(self.arrow(x, y), self.arrow(xz, self.meet(y, z)))
                        && leq(self.squig(x, y), self.squig(xz, self.meet(y, z))))
                    {
                        r.record("Prop 2.3(12)", &[x, y, z], "");
                    }
                    // Prop 2.5: hypotheses x <= y
                    if leq(x, y) {
                        let yz = self.meet(y, z);
                        if !(leq(self.sim(yz, y), self.sim(xz, x))
                            && leq(self.bsim(y, yz), self.bsim(x, xz)))
                        {
                            r.record("Prop 2.5(1)", &[x, y, z], "");
                        }
                        let zx = self.meet(z, x);
                        let zy = self.meet(z, y);
                        if !(leq(self.sim(zx, z), self.sim(zy, z))
                            && leq(self.bsim(z, zx), self.bsim(z, zy)))
                        {
                            r.record("Prop 2.5(2)", &[x, y, z], "");
                        }
                        // Prop 2.8(5) with (x1, x2, y) := (x, y, z)
                        if !(leq(self.vee1(x, z), self.vee1(y, z))
                            && leq(self.vee2(x, z), self.vee2(y, z)))
                        {
                            r.record("Prop 2.8(5)", &[x, y, z], "");
                        }
                    }
                }

                // Two-variable clauses.
                let m = self.meet(x, y);
                let v1 = self.vee1(x, y);
                let v2 = self.vee2(x, y);
                if !(leq(self.sim(x, y), self.arrow(y, x)) && leq(self.bsim(x, y), self.squig(x, y)))
                {
                    r.record("Prop 2.3(1)", &[x, y], "");
                }
                if !(leq(x, self.bsim(self.sim(y, x), y)) && leq(x, self.sim(y, self.bsim(x, y))))
                {
                    r.record("Prop 2.3(2)", &[x, y], "");
                }
                if (self.bsim(x, y) == top || self.sim(y, x) == top) && !leq(x, y) {
                    r.record("Prop 2.3(3)", &[x, y], "");
                }
                {
                    let l = leq(x, y);
                    if (self.arrow(x, y) == top) != l || (self.squig(x, y) == top) != l {
                        r.record("Prop 2.3(5)", &[x, y], "");
                    }
                }
                if !(leq(x, self.arrow(y, x)) && leq(x, self.squig(y, x))) {
                    r.record("Prop 2.3(7)", &[x, y], "");
                }
                if !(leq(x, self.squig(self.arrow(x, y), y))
                    && leq(x, self.arrow(self.squig(x, y), y)))
                {
                    r.record("Prop 2.3(8)", &[x, y], "");
                }
                if self.arrow(x, y) != self.arrow(x, m) || self.squig(x, y) != self.squig(x, m) {
                    r.record("Prop 2.3(13)", &[x, y], "");
                }
                if leq(x, y) && !(leq(x, self.sim(x, y)) && leq(x, self.bsim(y, x))) {
                    r.record("Prop 2.3(15)", &[x, y], "");
                    r.record("Prop 2.4(2)", &[x, y], "");
                }
                if !(leq(self.sim(x, y), self.sim(top, self.sim(y, x)))
                    && leq(self.bsim(x, y), self.sim(top, self.bsim(y, x))))
                {
                    r.record("Prop 2.3(16)", &[x, y], "");
                }
                // Prop 2.4
                if !(leq(y, self.sim(m, x)) && leq(y, self.bsim(x, m))) {
                    r.record("Prop 2.4(1)", &[x, y], "");
                }
                if !(leq(x, v1) && leq(x, v2)) {
                    r.record("Prop 2.4(3)", &[x, y], "");
                }
                if !(leq(y, v1) && leq(y, v2)) {
                    r.record("Prop 2.4(4)", &[x, y], "");
                }
                if !(leq(self.sim(x, y), self.sim(m, y)) && leq(self.bsim(x, y), self.bsim(x, m)))
                {
                    r.record("Prop 2.4(5)", &[x, y], "");
                }
                // Prop 2.6
                if self.sim(y, v1) != self.sim(m, x) {
                    r.record("Prop 2.6(1)", &[x, y], "");
                }
                if self.bsim(v2, y) != self.bsim(x, m) {
                    r.record("Prop 2.6(2)", &[x, y], "");
                }
                // Prop 2.7
                if !(leq(x, self.sim(x, v1)) && leq(x, self.bsim(v1, x))) {
                    r.record("Prop 2.7(1)", &[x, y], "");
                }
                if !(leq(x, self.sim(x, v2)) && leq(x, self.bsim(v2, x))) {
                    r.record("Prop 2.7(2)", &[x, y], "");
                }
                if !(leq(y, self.sim(y, v1)) && leq(y, self.bsim(v1, y))) {
                    r.record("Prop 2.7(3)", &[x, y], "");
                }
                if !(leq(y, self.sim(y, v2)) && leq(y, self.bsim(v2, y))) {
                    r.record("Prop 2.7(4)", &[x, y], "");
                }
                // Prop 2.8
                if leq(x, y) && !(v1 == y && v2 == y) {
                    r.record("Prop 2.8(2)", &[x, y], "");
                }
                if !(leq(x, v1) && leq(y, v1) && leq(x, v2) && leq(y, v2)) {
                    r.record("Prop 2.8(4)", &[x, y], "");
                }
                if self.sim(m, x) != self.sim(y, v1) || self.bsim(x, m) != self.bsim(v2, y) {
                    r.record("Prop 2.8(6)", &[x, y], "");
                }
            }

            // One-variable clauses.
            if !(self.arrow(top, x) == x
                && self.squig(top, x) == x
                && self.arrow(x, top) == top
                && self.squig(x, top) == top
                && self.arrow(x, x) == top
                && self.squig(x, x) == top)
            {
                r.record("Prop 2.3(6)", &[x], "");
            }
            if self.sim(top, x) != self.bsim(x, top) {
                r.record("Prop 2.3(14)", &[x], "");
            }
            {
                let a = self.vee1(top, x);
                let b = self.vee1(x, top);
                let c = self.vee2(top, x);
                let d = self.vee2(x, top);
                if !(a == b && b == c && c == d) {
                    r.record("Prop 2.8(1)", &[x], "");
                }
            }
            if self.vee1(x, x) != x || self.vee2(x, x) != x {
                r.record("Prop 2.8(3)", &[x], "");
            }
        }
        Ok(r)
    }
}

/// The k-element linear commutative algebra, a self-validated fixture.
///
/// Built from the Łukasiewicz-style implication `x → y = min(top, top − x + y)`
/// on the chain `0 < 1 < … < k−1` and turned into an equality structure by
/// `x ∼ y = y → x`, `x ⤙ y = x → y`.
pub fn chain(k: usize) -> FiniteEqAlgebra {
    assert!(k >= 1, "chain needs at least one element");
    let top = k - 1;
    let imp = |x: usize, y: usize| (top + y).saturating_sub(x).min(top);
    let mut meet = vec![vec![0; k]; k];
    let mut sim = vec![vec![0; k]; k];
    let mut bsim = vec![vec![0; k]; k];
    for x in 0..k {
        for y in 0..k {
            meet[x][y] = x.min(y);
            sim[x][y] = imp(y, x);
            bsim[x][y] = imp(x, y);
        }
    }
    let alg = FiniteEqAlgebra {
        n: k,
        names: (0..k).map(|i| i.to_string()).collect(),
        top,
        meet,
        sim,
        bsim,
    };
    let report = alg.verify_axioms().expect("chain tables are well-formed");
    assert!(report.passed(), "chain generator produced an invalid algebra");
    alg
}

/// Small hand-checked instances used across tests and examples.
pub mod fixtures {
    use super::FiniteEqAlgebra;

    /// The four-element diamond fixture with 0 < a, b < 1.
    pub fn diamond() -> FiniteEqAlgebra {
        // Elements 0, a, b, 1 as indices 0, 1, 2, 3.
        let names = ["0", "a", "b", "1"].map(str::to_string).to_vec();
        let meet = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ];
        let sim = vec![
            vec![3, 2, 1, 0],
            vec![3, 3, 1, 1],
            vec![3, 2, 3, 2],
            vec![3, 3, 3, 3],
        ];
        let bsim = vec![
            vec![3, 3, 3, 3],
            vec![2, 3, 2, 3],
            vec![1, 1, 3, 3],
            vec![0, 1, 2, 3],
        ];
        FiniteEqAlgebra { n: 4, names, top: 3, meet, sim, bsim }
    }

    /// The one-element algebra.
    pub fn point() -> FiniteEqAlgebra {
        FiniteEqAlgebra {
            n: 1,
            names: vec!["1".into()],
            top: 0,
            meet: vec![vec![0]],
            sim: vec![vec![0]],
            bsim: vec![vec![0]],
        }
    }
}
