//! Orbit enumeration for the fourfold symmetry.
//!
//! Index pairs `(x, y)` over `Z/NZ` are partitioned into orbits of the
//! group generated by `(x, y) -> (y, x)` (with conjugation) and
//! `(x, y) -> (-y, -x)` (without). Each orbit carries exactly one free
//! scalar; samplers write every member from the representative, so the
//! symmetry holds exactly by construction.

/// One orbit of the fourfold relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest member.
    pub representative: (usize, usize),
    /// Distinct member pairs, each with a flag marking whether the entry
    /// holds the conjugate of the representative value.
    pub members: Vec<((usize, usize), bool)>,
    /// True when the relations force the representative to be real
    /// (diagonal entries, and entries whose indices are both self-paired).
    pub forced_real: bool,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Builds the orbit containing `(x, y)`.
    pub fn of(n: usize, x: usize, y: usize) -> Self {
        let x = x % n;
        let y = y % n;
        let neg = |a: usize| (n - a) % n;
        // (pair, holds-conjugate) images under the four group elements.
        let images = [
            ((x, y), false),
            ((y, x), true),
            ((neg(y), neg(x)), false),
            ((neg(x), neg(y)), true),
        ];
        let mut members: Vec<((usize, usize), bool)> = Vec::with_capacity(4);
        let mut forced_real = false;
        for (pair, conj) in images {
            match members.iter().find(|(p, _)| *p == pair) {
                None => members.push((pair, conj)),
                Some(&(_, existing)) => {
                    if existing != conj {
                        // Same entry required to equal both v and conj(v).
                        forced_real = true;
                    }
                }
            }
        }
        members.sort_by_key(|&(p, _)| p);
        let representative = members[0].0;
        if forced_real {
            for m in &mut members {
                m.1 = false;
            }
        }
        Self { representative, members, forced_real }
    }

    /// True when the orbit involves row or column `x` or `-x`.
    pub fn touches(&self, n: usize, x: usize) -> bool {
        let x = x % n;
        let mx = (n - x) % n;
        self.members
            .iter()
            .any(|&((a, b), _)| a == x || b == x || a == mx || b == mx)
    }
}

/// Canonical list of orbit representatives for dimension `n`, in row-major
/// order of the representative pair. The position in this list is the
/// orbit's RNG stream index.
pub fn orbit_representatives(n: usize) -> Vec<Orbit> {
    let mut orbits = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let orbit = Orbit::of(n, x, y);
            if orbit.representative == (x, y) {
                orbits.push(orbit);
            }
        }
    }
    orbits
}

/// Orbits that involve row or column `x` or `-x`, in canonical order.
pub fn orbits_touching(n: usize, x: usize) -> Vec<(usize, Orbit)> {
    orbit_representatives(n)
        .into_iter()
        .enumerate()
        .filter(|(_, o)| o.touches(n, x))
        .collect()
}

/// Indices with `x = -x (mod n)`: always 0, and `n/2` when `n` is even.
pub fn self_paired_indices(n: usize) -> Vec<usize> {
    let mut v = vec![0];
    if n % 2 == 0 && n > 1 {
        v.push(n / 2);
    }
    v
}

pub fn is_self_paired(n: usize, x: usize) -> bool {
    x % n == (n - x % n) % n
}

/// Number of free real parameters of the constraint system: one per
/// forced-real orbit, two otherwise.
pub fn free_real_parameters(n: usize) -> usize {
    orbit_representatives(n)
        .iter()
        .map(|o| if o.forced_real { 1 } else { 2 })
        .sum()
}
