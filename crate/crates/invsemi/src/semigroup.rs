//! Finite inverse semigroups as validated Cayley tables, plus partial
//! bijections and generator closure.
//!
//! An inverse semigroup is a semigroup in which every element `a` has a
//! unique `b` with `aba = a` and `bab = b`. Equivalently: the semigroup is
//! regular and its idempotents commute. [`InverseSemigroup::from_table`]
//! checks the definition eagerly — associativity, regularity, commuting
//! idempotents, uniqueness of inverses — so every value of the type is a
//! genuine inverse semigroup and later algorithms can rely on the axioms.
//!
//! Elements are dense indices `0..order`. The multiplication table is stored
//! flat (row-major, `u32` entries), which keeps the hot loops cache-friendly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use thiserror::Error;

/// The row-major-first triple `(a, b, c)` with `(ab)c != a(bc)`, if any.
/// The parallel scan splits by `a`, finds each row's first witness in scan
/// order, and takes the least `a` — the same witness the sequential scan
/// reports, so validation errors are identical across thread counts.
fn first_associativity_violation(order: usize, table: &[u32]) -> Option<(usize, usize, usize)> {
    let mul = |a: usize, b: usize| table[a * order + b] as usize;
    let first_in_row = |a: usize| -> Option<(usize, usize, usize)> {
        for b in 0..order {
            let ab = mul(a, b);
            for c in 0..order {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
        None
    };

    #[cfg(feature = "parallel")]
    {
        (0..order)
            .into_par_iter()
            .filter_map(first_in_row)
            .min_by_key(|&(a, _, _)| a)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..order).find_map(first_in_row)
    }
}

/// Why a multiplication table failed inverse-semigroup validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("table must be {expected}x{expected}, found row {row} of length {len}")]
    BadShape {
        expected: usize,
        row: usize,
        len: usize,
    },
    #[error("order must be at least 1")]
    EmptyTable,
    #[error("entry at ({row},{col}) is {value}, outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("associativity fails at ({a},{b},{c}): ({a}{b}){c} != {a}({b}{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} is not regular (no b with aba=a and bab=b)")]
    NotRegular { element: usize },
    #[error("idempotents {e} and {f} do not commute")]
    IdempotentsDontCommute { e: usize, f: usize },
    #[error("element {element} has more than one inverse")]
    NoUniqueInverse { element: usize },
}

/// Errors from building a semigroup out of partial-bijection generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("generator degree {found} does not match declared degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureExceedsLimit { cap: usize },
    #[error("map is not injective: point {point} has two preimages")]
    NotInjective { point: usize },
    #[error("image {target} out of range for degree {degree}")]
    TargetOutOfRange { target: usize, degree: usize },
}

/// Default ceiling for generator closures (guards runaway inputs; the
/// symmetric inverse monoid on 4 points, order 209, fits comfortably).
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

/// A finite inverse semigroup on elements `0..order`, validated at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSemigroup {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    idempotents: Vec<usize>,
    idempotent_mask: Vec<bool>,
}

impl InverseSemigroup {
    /// Validate a multiplication table and build the semigroup.
    ///
    /// Checks, in order: shape, entry range, associativity, regularity of
    /// every element, pairwise commuting of idempotents, uniqueness of
    /// inverses. The error reports the first witness found in row-major scan
    /// order, so failures are deterministic.
    pub fn from_table(order: usize, rows: &[Vec<usize>]) -> Result<Self, ValidationError> {
        if order == 0 {
            return Err(ValidationError::EmptyTable);
        }
        if rows.len() != order {
            return Err(ValidationError::BadShape {
                expected: order,
                row: rows.len(),
                len: 0,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(ValidationError::BadShape {
                    expected: order,
                    row: r,
                    len: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(ValidationError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order,
                    });
                }
                table.push(v as u32);
            }
        }

        let mul = |a: usize, b: usize| table[a * order + b] as usize;

        if let Some((a, b, c)) = first_associativity_violation(order, &table) {
            return Err(ValidationError::NotAssociative { a, b, c });
        }

        // One pass per element: find all candidate inverses.
        let mut inv = vec![0u32; order];
        let mut pending_unique: Option<usize> = None;
        for (a, slot) in inv.iter_mut().enumerate() {
            let mut found: Option<usize> = None;
            let mut extra = false;
            for b in 0..order {
                if mul(mul(a, b), a) == a && mul(mul(b, a), b) == b {
                    match found {
                        None => found = Some(b),
                        Some(_) => extra = true,
                    }
                }
            }
            match found {
                None => return Err(ValidationError::NotRegular { element: a }),
                Some(b) => {
                    *slot = b as u32;
                    if extra && pending_unique.is_none() {
                        pending_unique = Some(a);
                    }
                }
            }
        }

        let idempotents: Vec<usize> = (0..order).filter(|&e| mul(e, e) == e).collect();
        for (i, &e) in idempotents.iter().enumerate() {
            for &f in &idempotents[i + 1..] {
                if mul(e, f) != mul(f, e) {
                    return Err(ValidationError::IdempotentsDontCommute { e, f });
                }
            }
        }

        // Reported after the idempotent check: a regular table with commuting
        // idempotents cannot actually reach this error, so it only fires for
        // tables that are regular but have non-commuting idempotents caught
        // above, or genuinely ambiguous inverses.
        if let Some(a) = pending_unique {
            return Err(ValidationError::NoUniqueInverse { element: a });
        }

        let mut idempotent_mask = vec![false; order];
        for &e in &idempotents {
            idempotent_mask[e] = true;
        }

        Ok(InverseSemigroup {
            order,
            table,
            inv,
            idempotents,
            idempotent_mask,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// Product of a sequence of elements (left to right); `None` for empty.
    pub fn product(&self, elems: &[usize]) -> Option<usize> {
        let (&first, rest) = elems.split_first()?;
        Some(rest.iter().fold(first, |acc, &x| self.mul(acc, x)))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Idempotents in ascending order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotent_mask[a]
    }

    /// Position of idempotent `e` within `idempotents()`.
    pub fn idempotent_position(&self, e: usize) -> usize {
        self.idempotents
            .binary_search(&e)
            .expect("not an idempotent")
    }

    /// The zero element (`za = az = z` for all `a`), if present.
    pub fn zero(&self) -> Option<usize> {
        (0..self.order).find(|&z| (0..self.order).all(|a| self.mul(z, a) == z && self.mul(a, z) == z))
    }

    /// Natural partial order: `a <= b` iff `a = eb` for some idempotent `e`.
    pub fn natural_leq(&self, a: usize, b: usize) -> bool {
        self.idempotents.iter().any(|&e| self.mul(e, b) == a)
    }

    /// Right-handed form of the natural order: `a = bf` for some idempotent
    /// `f`. Provably equal to [`natural_leq`](Self::natural_leq); exposed so
    /// tests can confirm both routes agree.
    pub fn natural_leq_right(&self, a: usize, b: usize) -> bool {
        self.idempotents.iter().any(|&f| self.mul(b, f) == a)
    }

    /// Elements commuting with every idempotent.
    pub fn centralizer_of_idempotents(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| {
                self.idempotents
                    .iter()
                    .all(|&e| self.mul(a, e) == self.mul(e, a))
            })
            .collect()
    }

    /// Closure of the idempotents under the natural order, upward: the set of
    /// elements lying above some idempotent.
    pub fn idempotent_closure(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| self.idempotents.iter().any(|&e| self.natural_leq(e, a)))
            .collect()
    }

    /// Does `set` contain every idempotent?
    pub fn is_full(&self, set: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        for &x in set {
            mask[x] = true;
        }
        self.idempotents.iter().all(|&e| mask[e])
    }

    /// Is `set` a full, self-conjugate inverse subsemigroup (the shape every
    /// congruence kernel has)? `set` must be duplicate-free.
    pub fn is_normal_subsemigroup(&self, set: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        for &x in set {
            mask[x] = true;
        }
        self.is_full(set)
            && set.iter().all(|&k| mask[self.inv(k)])
            && set.iter().all(|&k| set.iter().all(|&l| mask[self.mul(k, l)]))
            && (0..self.order)
                .all(|a| set.iter().all(|&k| mask[self.mul(self.mul(self.inv(a), k), a)]))
    }

    /// Restrict to a subset that is closed under multiplication (and hence,
    /// for the sets this crate passes in, under inversion). Panics if the
    /// subset is not closed — callers only use it on congruence classes of
    /// idempotents and congruence kernels, which are closed by construction.
    pub fn subsemigroup(&self, elements: &[usize]) -> InverseSemigroup {
        let mut position = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i;
        }
        let rows: Vec<Vec<usize>> = elements
            .iter()
            .map(|&a| {
                elements
                    .iter()
                    .map(|&b| {
                        let p = position[self.mul(a, b)];
                        assert!(p != usize::MAX, "subset not closed under multiplication");
                        p
                    })
                    .collect()
            })
            .collect();
        InverseSemigroup::from_table(elements.len(), &rows)
            .expect("closed subset of an inverse semigroup is an inverse semigroup")
    }

    /// Rows of the multiplication table (for emission).
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// A partial injective map on `0..degree`; the element type of symmetric
/// inverse monoids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialBijection {
    degree: usize,
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn new(degree: usize, map: Vec<Option<usize>>) -> Result<Self, GeneratorError> {
        if map.len() != degree {
            return Err(GeneratorError::DegreeMismatch {
                expected: degree,
                found: map.len(),
            });
        }
        let mut hit = vec![false; degree];
        for &image in map.iter().flatten() {
            if image >= degree {
                return Err(GeneratorError::TargetOutOfRange {
                    target: image,
                    degree,
                });
            }
            if hit[image] {
                return Err(GeneratorError::NotInjective { point: image });
            }
            hit[image] = true;
        }
        Ok(PartialBijection { degree, map })
    }

    pub fn identity(degree: usize) -> Self {
        PartialBijection {
            degree,
            map: (0..degree).map(Some).collect(),
        }
    }

    pub fn empty(degree: usize) -> Self {
        PartialBijection {
            degree,
            map: vec![None; degree],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    /// Composition `self ∘ rhs`: the right factor acts first,
    /// `(fg)(x) = f(g(x))`.
    pub fn compose(&self, rhs: &PartialBijection) -> PartialBijection {
        assert_eq!(self.degree, rhs.degree);
        let map = (0..self.degree)
            .map(|x| rhs.map[x].and_then(|y| self.map[y]))
            .collect();
        PartialBijection {
            degree: self.degree,
            map,
        }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut map = vec![None; self.degree];
        for (x, &image) in self.map.iter().enumerate() {
            if let Some(y) = image {
                map[y] = Some(x);
            }
        }
        PartialBijection {
            degree: self.degree,
            map,
        }
    }

    /// Partial identities are exactly the idempotents of composition.
    pub fn is_partial_identity(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(x, &image)| image.is_none() || image == Some(x))
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }
}

/// Close a set of partial bijections under composition and inversion, and
/// return the resulting inverse semigroup together with the element list
/// (element `i` of the semigroup is `elements[i]`).
///
/// Discovery order is deterministic: generators first (duplicates dropped),
/// then breadth-first products. `cap` bounds the closure size.
pub fn from_partial_bijection_generators(
    degree: usize,
    generators: &[PartialBijection],
    cap: usize,
) -> Result<(InverseSemigroup, Vec<PartialBijection>), GeneratorError> {
    if generators.is_empty() {
        return Err(GeneratorError::EmptyGeneratorSet);
    }
    for g in generators {
        if g.degree() != degree {
            return Err(GeneratorError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }

    let mut elements: Vec<PartialBijection> = Vec::new();
    let mut index: std::collections::HashMap<PartialBijection, usize> =
        std::collections::HashMap::new();
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();

    let mut add = |pb: PartialBijection,
                   elements: &mut Vec<PartialBijection>,
                   queue: &mut std::collections::VecDeque<usize>|
     -> Result<(), GeneratorError> {
        if !index.contains_key(&pb) {
            if elements.len() >= cap {
                return Err(GeneratorError::ClosureExceedsLimit { cap });
            }
            index.insert(pb.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(pb);
        }
        Ok(())
    };

    for g in generators {
        add(g.clone(), &mut elements, &mut queue)?;
    }
    while let Some(i) = queue.pop_front() {
        add(elements[i].inverse(), &mut elements, &mut queue)?;
        let mut j = 0;
        while j < elements.len() {
            let left = elements[i].compose(&elements[j]);
            add(left, &mut elements, &mut queue)?;
            let right = elements[j].compose(&elements[i]);
            add(right, &mut elements, &mut queue)?;
            j += 1;
        }
    }

    let lookup = |pb: &PartialBijection| -> usize { index[pb] };
    let rows: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| lookup(&a.compose(b))).collect())
        .collect();
    let s = InverseSemigroup::from_table(elements.len(), &rows)
        .expect("closure of partial bijections under composition and inversion is inverse");
    Ok((s, elements))
}
