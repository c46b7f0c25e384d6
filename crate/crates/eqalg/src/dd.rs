//! Exact rational polyhedral cones via the incremental double description
//! method: a cone is carried both as a constraint list (homogeneous equalities
//! and inequalities) and as generators (lineality basis plus extreme rays).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

pub type Vect = Vec<BigRational>;

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn int_vec(v: &[i64]) -> Vect {
    v.iter().map(|&x| int(x)).collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn neg(v: &[BigRational]) -> Vect {
    v.iter().map(|x| -x).collect()
}

/// v := v − k·w
fn sub_scaled(v: &mut Vect, k: &BigRational, w: &[BigRational]) {
    for (a, b) in v.iter_mut().zip(w) {
        *a -= k * b;
    }
}

/// Scale a ray so its first nonzero coordinate has absolute value 1; the sign
/// is kept, so this is a positive rescaling.
fn normalize_ray(v: &mut Vect) {
    if let Some(p) = v.iter().position(|x| !x.is_zero()) {
        let k = v[p].abs();
        for x in v.iter_mut() {
            *x /= &k;
        }
    }
}

fn rref(rows: &mut Vec<Vect>) {
    if rows.is_empty() {
        return;
    }
    let dim = rows[0].len();
    let mut lead = 0;
    for col in 0..dim {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(lead, p);
        let k = rows[lead][col].clone();
        for x in rows[lead].iter_mut() {
            *x /= &k;
        }
        for r in 0..rows.len() {
            if r != lead && !rows[r][col].is_zero() {
                let k = rows[r][col].clone();
                let pivot_row = rows[lead].clone();
                sub_scaled(&mut rows[r], &k, &pivot_row);
            }
        }
        lead += 1;
        if lead == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
}

/// Reduce `v` modulo the row-reduced `basis` (each row's pivot entry is 1).
fn reduce_mod(v: &mut Vect, basis: &[Vect]) {
    for row in basis {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        let k = v[p].clone();
        if !k.is_zero() {
            sub_scaled(v, &k, row);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Eq,
    Ge,
}

/// A homogeneous linear constraint `coeffs · x = 0` or `coeffs · x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub coeffs: Vect,
}

impl Constraint {
    pub fn eq(coeffs: Vect) -> Self {
        Constraint { kind: ConstraintKind::Eq, coeffs }
    }

    pub fn ge(coeffs: Vect) -> Self {
        Constraint { kind: ConstraintKind::Ge, coeffs }
    }

    pub fn satisfied_by(&self, v: &[BigRational]) -> bool {
        let d = dot(&self.coeffs, v);
        match self.kind {
            ConstraintKind::Eq => d.is_zero(),
            ConstraintKind::Ge => !d.is_negative(),
        }
    }
}

/// A polyhedral cone in double description: the stored generators always span
/// exactly the solution set of the stored constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    pub dim: usize,
    pub constraints: Vec<Constraint>,
    pub lineality: Vec<Vect>,
    pub rays: Vec<Vect>,
}

fn tight_mask(halfspaces: &[Vect], upto: usize, r: &[BigRational]) -> Vec<u64> {
    let mut mask = vec![0u64; upto.div_ceil(64)];
    for (j, h) in halfspaces[..upto].iter().enumerate() {
        if dot(h, r).is_zero() {
            mask[j / 64] |= 1 << (j % 64);
        }
    }
    mask
}

fn mask_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

impl RationalCone {
    pub fn from_constraints(dim: usize, constraints: Vec<Constraint>) -> Self {
        // Work with inequalities only; an equality is its two half-spaces.
        let mut halfspaces: Vec<Vect> = Vec::new();
        for c in &constraints {
            assert_eq!(c.coeffs.len(), dim);
            halfspaces.push(c.coeffs.clone());
            if c.kind == ConstraintKind::Eq {
                halfspaces.push(neg(&c.coeffs));
            }
        }

        let mut lineality: Vec<Vect> = (0..dim)
            .map(|i| (0..dim).map(|j| int((i == j) as i64)).collect())
            .collect();
        let mut rays: Vec<Vect> = Vec::new();

        for idx in 0..halfspaces.len() {
            let c = halfspaces[idx].clone();
            if let Some(k) = lineality.iter().position(|v| !dot(&c, v).is_zero()) {
                // Pivot step: one lineality direction leaves the lineality
                // space and becomes a ray on the nonnegative side of c.
                let v0 = lineality.remove(k);
                let d0 = dot(&c, &v0);
                for v in lineality.iter_mut() {
                    let k = dot(&c, v) / &d0;
                    sub_scaled(v, &k, &v0);
                }
                for r in rays.iter_mut() {
                    let k = dot(&c, r) / &d0;
                    sub_scaled(r, &k, &v0);
                }
                rays.push(if d0.is_positive() { v0 } else { neg(&v0) });
            } else {
                let vals: Vec<BigRational> = rays.iter().map(|r| dot(&c, r)).collect();
                if vals.iter().all(|d| !d.is_negative()) {
                    continue;
                }
                let tight: Vec<Vec<u64>> =
                    rays.iter().map(|r| tight_mask(&halfspaces, idx, r)).collect();
                let mut next: Vec<Vect> = Vec::new();
                for (i, r) in rays.iter().enumerate() {
                    if !vals[i].is_negative() {
                        next.push(r.clone());
                    }
                }
                for (p, _) in vals.iter().enumerate().filter(|(_, d)| d.is_positive()) {
                    for (m, _) in vals.iter().enumerate().filter(|(_, d)| d.is_negative())
                    {
                        // Combinatorial adjacency: no third ray is tight on
                        // everything both p and m are tight on.
                        let common: Vec<u64> = tight[p]
                            .iter()
                            .zip(&tight[m])
                            .map(|(a, b)| a & b)
                            .collect();
                        let adjacent = (0..rays.len()).all(|q| {
                            q == p || q == m || !mask_subset(&common, &tight[q])
                        });
                        if adjacent {
                            // w = vals[p]·rays[m] − vals[m]·rays[p]; c·w = 0.
                            let mut w: Vect = rays[m]
                                .iter()
                                .map(|x| x * &vals[p])
                                .collect();
                            sub_scaled(&mut w, &vals[m], &rays[p]);
                            next.push(w);
                        }
                    }
                }
                rays = next;
            }
            // Deduplicate up to positive scaling; duplicates would defeat the
            // adjacency test at later steps.
            let mut seen = BTreeSet::new();
            rays.retain_mut(|r| {
                normalize_ray(r);
                r.iter().any(|x| !x.is_zero()) && seen.insert(r.clone())
            });
        }

        let mut cone = RationalCone { dim, constraints, lineality, rays };
        cone.canonicalize();
        debug_assert!(cone.self_consistent());
        cone
    }

    fn canonicalize(&mut self) {
        rref(&mut self.lineality);
        let mut seen = BTreeSet::new();
        self.rays.retain_mut(|r| {
            reduce_mod(r, &self.lineality);
            normalize_ray(r);
            r.iter().any(|x| !x.is_zero()) && seen.insert(r.clone())
        });
        self.rays.sort();
    }

    /// Every stored generator satisfies every stored constraint (lineality
    /// vectors in both directions).
    pub fn self_consistent(&self) -> bool {
        self.rays.iter().all(|r| self.contains(r))
            && self.lineality.iter().all(|v| self.contains(v) && self.contains(&neg(v)))
    }

    /// Membership by direct constraint evaluation.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.constraints.iter().all(|c| c.satisfied_by(v))
    }

    /// The polar cone `{y : r·y ≥ 0 for all generators r}` computed from this
    /// cone's generators.
    pub fn polar(&self) -> RationalCone {
        let mut cs: Vec<Constraint> = Vec::new();
        for r in &self.rays {
            cs.push(Constraint::ge(r.clone()));
        }
        for v in &self.lineality {
            cs.push(Constraint::eq(v.clone()));
        }
        RationalCone::from_constraints(self.dim, cs)
    }

    /// Rebuild the cone from constraints derived from its own generators
    /// (polar of the polar). Equality with `self` up to canonical form is the
    /// double-description fixpoint property.
    pub fn regenerated(&self) -> RationalCone {
        self.polar().polar()
    }

    /// Same generators (both sides are canonical after construction).
    pub fn same_cone(&self, other: &RationalCone) -> bool {
        self.dim == other.dim
            && self.lineality == other.lineality
            && self.rays == other.rays
    }

    /// Every generator of `self` lies in `other` (cone inclusion test).
    pub fn included_in(&self, other: &RationalCone) -> bool {
        self.rays.iter().all(|r| other.contains(r))
            && self
                .lineality
                .iter()
                .all(|v| other.contains(v) && other.contains(&neg(v)))
    }

    pub fn is_zero_cone(&self) -> bool {
        self.lineality.is_empty() && self.rays.is_empty()
    }

    /// Text block: one `L` line per lineality vector, one `R` line per ray.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for v in &self.lineality {
            out.push('L');
            for x in v {
                out.push_str(&format!(" {}", x));
            }
            out.push('\n');
        }
        for r in &self.rays {
            out.push('R');
            for x in r {
                out.push_str(&format!(" {}", x));
            }
            out.push('\n');
        }
        out
    }
}
