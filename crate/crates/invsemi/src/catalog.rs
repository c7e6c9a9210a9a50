//! Constructors for standard families (groups, semilattices, Brandt
//! semigroups, symmetric inverse monoids, strong semilattices of groups,
//! direct products, partial-bijection closures) and a named catalog of
//! small instances with frozen expected facts.
//!
//! The catalog facts live in `catalog_manifest.txt`; a regression test
//! re-derives every fact from scratch and compares against the manifest.

use crate::semigroup::{
    from_partial_bijection_generators, GeneratorError, InverseSemigroup, PartialBijection,
    ValidationError, DEFAULT_CLOSURE_CAP,
};
use thiserror::Error;

/// Why a builder rejected its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("symmetric inverse monoids are only built for degrees 1..=4 (got {0})")]
    DegreeTooLarge(usize),
    #[error("not a group: expected exactly one idempotent")]
    NotAGroup,
    #[error("not a semilattice: expected every element to be idempotent")]
    NotASemilattice,
    #[error("linking maps are not functorial: {reason}")]
    MapsNotFunctorial { reason: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error(transparent)]
    Closure(#[from] GeneratorError),
}

/// Build a group from its multiplication table (validated: a group is an
/// inverse semigroup with exactly one idempotent).
pub fn build_group(rows: &[Vec<usize>]) -> Result<InverseSemigroup, BuildError> {
    let s = InverseSemigroup::from_table(rows.len(), rows)?;
    if s.idempotents().len() != 1 {
        return Err(BuildError::NotAGroup);
    }
    Ok(s)
}

/// Build a semilattice from its meet table (validated: every element must be
/// idempotent; commutativity then follows from table validation).
pub fn build_semilattice(rows: &[Vec<usize>]) -> Result<InverseSemigroup, BuildError> {
    let s = InverseSemigroup::from_table(rows.len(), rows)?;
    if s.idempotents().len() != s.order() {
        return Err(BuildError::NotASemilattice);
    }
    Ok(s)
}

/// The chain semilattice 0 < 1 < ... < k-1 under minimum.
pub fn build_chain_semilattice(k: usize) -> Result<InverseSemigroup, BuildError> {
    let rows: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| a.min(b)).collect()).collect();
    build_semilattice(&rows)
}

/// The Brandt semigroup over `group` with `n` rows/columns: elements are a
/// zero (index 0) plus triples `(i, g, j)` with `0 <= i, j < n`, indexed as
/// `1 + (i*n + j)*|G| + g`. Product: `(i,a,j)(k,b,l)` is `(i, ab, l)` when
/// `j == k` and zero otherwise.
pub fn build_brandt(group: &InverseSemigroup, n: usize) -> Result<InverseSemigroup, BuildError> {
    if group.idempotents().len() != 1 {
        return Err(BuildError::NotAGroup);
    }
    let go = group.order();
    let order = n * n * go + 1;
    let idx = |i: usize, g: usize, j: usize| 1 + (i * n + j) * go + g;
    let mut rows = vec![vec![0usize; order]; order];
    for i in 0..n {
        for j in 0..n {
            for a in 0..go {
                for k in 0..n {
                    for l in 0..n {
                        for b in 0..go {
                            if j == k {
                                rows[idx(i, a, j)][idx(k, b, l)] = idx(i, group.mul(a, b), l);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(InverseSemigroup::from_table(order, &rows)?)
}

/// The symmetric inverse monoid on `n` points: all injective partial maps
/// on `{0, ..., n-1}` under composition `(fg)(x) = f(g(x))` (right factor
/// acts first). Elements are indexed lexicographically by their map vector
/// `(m(0), ..., m(n-1))` with `None < Some(0) < Some(1) < ...`.
///
/// Supported for `n` in `1..=4` (orders 2, 7, 34, 209).
pub fn build_symmetric_inverse_monoid(n: usize) -> Result<InverseSemigroup, BuildError> {
    if !(1..=4).contains(&n) {
        return Err(BuildError::DegreeTooLarge(n));
    }
    // Enumerate candidate map vectors in lexicographic order by counting in
    // base n+1 (digit 0 encodes "undefined", digit k encodes image k-1).
    let mut maps: Vec<PartialBijection> = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let vector: Vec<Option<usize>> = digits.iter().map(|&d| d.checked_sub(1)).collect();
        if let Ok(pb) = PartialBijection::new(n, vector) {
            maps.push(pb);
        }
        // Increment the counter; most significant digit first gives
        // lexicographic order over the vectors.
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] <= n {
                break;
            }
            digits[pos] = 0;
            if pos == 0 {
                let order = maps.len();
                let index = |pb: &PartialBijection| -> usize {
                    maps.binary_search_by(|probe| probe.cmp(pb)).expect("closed")
                };
                let rows: Vec<Vec<usize>> = maps
                    .iter()
                    .map(|a| maps.iter().map(|b| index(&a.compose(b))).collect())
                    .collect();
                return Ok(InverseSemigroup::from_table(order, &rows)?);
            }
        }
    }
}

/// A strong semilattice of groups (a Clifford semigroup built from explicit
/// data): `meet_rows` is the semilattice of idempotent points, `groups[i]`
/// the group sitting at point `i`, and `links` the downward linking
/// homomorphisms `(upper, lower, map)` for every comparable pair
/// `lower < upper`. Linking maps must be homomorphisms and compose
/// functorially; identity links are implicit.
///
/// Element `(i, x)` is indexed as `offset(i) + x` where points are laid out
/// in order. The product of `(i, x)` and `(j, y)` lives at `m = i ∧ j` and
/// equals `link(i→m)(x) · link(j→m)(y)`.
pub fn build_clifford(
    meet_rows: &[Vec<usize>],
    groups: &[InverseSemigroup],
    links: &[(usize, usize, Vec<usize>)],
) -> Result<InverseSemigroup, BuildError> {
    let y = build_semilattice(meet_rows)?;
    let k = y.order();
    if groups.len() != k {
        return Err(BuildError::MapsNotFunctorial {
            reason: format!("expected {} groups, got {}", k, groups.len()),
        });
    }
    for g in groups {
        if g.idempotents().len() != 1 {
            return Err(BuildError::NotAGroup);
        }
    }

    // Collect the declared links and check each is a homomorphism.
    let mut link: std::collections::HashMap<(usize, usize), &Vec<usize>> =
        std::collections::HashMap::new();
    for (upper, lower, map) in links {
        let (u, l) = (*upper, *lower);
        if u >= k || l >= k || y.mul(u, l) != l || u == l {
            return Err(BuildError::MapsNotFunctorial {
                reason: format!("link {u}->{l} does not descend a comparable pair"),
            });
        }
        if map.len() != groups[u].order() || map.iter().any(|&t| t >= groups[l].order()) {
            return Err(BuildError::MapsNotFunctorial {
                reason: format!("link {u}->{l} has the wrong shape"),
            });
        }
        for a in 0..groups[u].order() {
            for b in 0..groups[u].order() {
                if map[groups[u].mul(a, b)] != groups[l].mul(map[a], map[b]) {
                    return Err(BuildError::MapsNotFunctorial {
                        reason: format!("link {u}->{l} is not a homomorphism"),
                    });
                }
            }
        }
        if link.insert((u, l), map).is_some() {
            return Err(BuildError::MapsNotFunctorial {
                reason: format!("duplicate link {u}->{l}"),
            });
        }
    }

    // Every strictly comparable pair needs a link, and links must compose.
    let descend = |from: usize, to: usize, x: usize| -> Result<usize, BuildError> {
        if from == to {
            return Ok(x);
        }
        link.get(&(from, to)).map(|m| m[x]).ok_or_else(|| BuildError::MapsNotFunctorial {
            reason: format!("missing link {from}->{to}"),
        })
    };
    #[allow(clippy::needless_range_loop)] // u, l, g are semilattice points used in several roles
    for u in 0..k {
        for l in 0..k {
            if u != l && y.mul(u, l) == l {
                descend(u, l, 0)?;
                for g in 0..k {
                    if g != l && g != u && y.mul(l, g) == g {
                        for x in 0..groups[u].order() {
                            if descend(l, g, descend(u, l, x)?)? != descend(u, g, x)? {
                                return Err(BuildError::MapsNotFunctorial {
                                    reason: format!("links {u}->{l}->{g} do not compose"),
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    let offsets: Vec<usize> = groups
        .iter()
        .scan(0usize, |acc, g| {
            let here = *acc;
            *acc += g.order();
            Some(here)
        })
        .collect();
    let order: usize = groups.iter().map(|g| g.order()).sum();
    let point_of: Vec<usize> = (0..k)
        .flat_map(|i| std::iter::repeat_n(i, groups[i].order()))
        .collect();

    let mut rows = vec![vec![0usize; order]; order];
    for a in 0..order {
        for b in 0..order {
            let (i, x) = (point_of[a], a - offsets[point_of[a]]);
            let (j, yy) = (point_of[b], b - offsets[point_of[b]]);
            let m = y.mul(i, j);
            let prod = groups[m].mul(descend(i, m, x)?, descend(j, m, yy)?);
            rows[a][b] = offsets[m] + prod;
        }
    }
    Ok(InverseSemigroup::from_table(order, &rows)?)
}

/// Direct product: element `(a, b)` is indexed as `a * |T| + b`.
pub fn direct_product(
    s: &InverseSemigroup,
    t: &InverseSemigroup,
) -> Result<InverseSemigroup, BuildError> {
    let order = s.order() * t.order();
    let idx = |a: usize, b: usize| a * t.order() + b;
    let mut rows = vec![vec![0usize; order]; order];
    for a1 in 0..s.order() {
        for b1 in 0..t.order() {
            for a2 in 0..s.order() {
                for b2 in 0..t.order() {
                    rows[idx(a1, b1)][idx(a2, b2)] = idx(s.mul(a1, a2), t.mul(b1, b2));
                }
            }
        }
    }
    Ok(InverseSemigroup::from_table(order, &rows)?)
}

/// An order-7 E-unitary, non-Clifford inverse semigroup, realized as the
/// closure of two partial bijections on 6 points. The underlying geometry:
/// an involution swaps two three-element chains glued at a common bottom;
/// one generator is the partial identity on the up-set of one chain, the
/// other is the involution restricted to a domain one step down.
pub fn build_eunitary7() -> Result<InverseSemigroup, BuildError> {
    let g1 = PartialBijection::new(
        6,
        vec![Some(0), Some(1), Some(2), None, Some(4), None],
    )?;
    let g2 = PartialBijection::new(
        6,
        vec![Some(1), Some(0), None, Some(2), None, None],
    )?;
    let (s, _) = from_partial_bijection_generators(6, &[g1, g2], DEFAULT_CLOSURE_CAP)?;
    Ok(s)
}

/// Facts frozen for a catalog entry, checked against recomputed values in
/// tests. `stab_level` is the least level at which both minimization chains
/// stop moving; `lattice_size` counts all congruences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub order: usize,
    pub idempotents: usize,
    pub zero: bool,
    pub clifford: bool,
    pub e_unitary: bool,
    pub e_reflexive: bool,
    pub fundamental: bool,
    pub e_disjunctive: bool,
    pub stab_level: usize,
    pub lattice_size: usize,
}

/// A named catalog instance.
pub struct CatalogEntry {
    pub name: &'static str,
    pub semigroup: InverseSemigroup,
    pub expected: ExpectedFacts,
}

const MANIFEST: &str = include_str!("catalog_manifest.txt");

fn parse_manifest() -> Vec<(String, ExpectedFacts)> {
    let mut out = Vec::new();
    for (lineno, line) in MANIFEST.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let name = tokens.next().expect("manifest line must start with a name");
        let mut fields: std::collections::HashMap<&str, &str> = std::collections::HashMap::new();
        for token in tokens {
            let (k, v) = token
                .split_once('=')
                .unwrap_or_else(|| panic!("manifest line {}: bad token {token}", lineno + 1));
            fields.insert(k, v);
        }
        let num = |k: &str| -> usize {
            fields
                .get(k)
                .unwrap_or_else(|| panic!("manifest line {}: missing {k}", lineno + 1))
                .parse()
                .unwrap_or_else(|_| panic!("manifest line {}: bad number for {k}", lineno + 1))
        };
        let flag = |k: &str| -> bool {
            match fields.get(k).copied() {
                Some("yes") => true,
                Some("no") => false,
                _ => panic!("manifest line {}: {k} must be yes or no", lineno + 1),
            }
        };
        out.push((
            name.to_string(),
            ExpectedFacts {
                order: num("order"),
                idempotents: num("idempotents"),
                zero: flag("zero"),
                clifford: flag("clifford"),
                e_unitary: flag("e_unitary"),
                e_reflexive: flag("e_reflexive"),
                fundamental: flag("fundamental"),
                e_disjunctive: flag("e_disjunctive"),
                stab_level: num("stab_level"),
                lattice_size: num("lattice_size"),
            },
        ));
    }
    out
}

/// Every named instance, in a fixed order. Panics only if the embedded
/// manifest and the builder list drift apart (covered by tests).
pub fn catalog() -> Vec<CatalogEntry> {
    let c2 = || build_group(&[vec![0, 1], vec![1, 0]]).unwrap();
    let chain2 = || build_chain_semilattice(2).unwrap();
    let b2 = || build_brandt(&build_group(&[vec![0]]).unwrap(), 2).unwrap();
    let builders: Vec<(&'static str, InverseSemigroup)> = vec![
        ("trivial", build_group(&[vec![0]]).unwrap()),
        ("C2", c2()),
        (
            "C4",
            build_group(&[
                vec![0, 1, 2, 3],
                vec![1, 2, 3, 0],
                vec![2, 3, 0, 1],
                vec![3, 0, 1, 2],
            ])
            .unwrap(),
        ),
        ("chain2", chain2()),
        ("chain4", build_chain_semilattice(4).unwrap()),
        ("B2", b2()),
        ("BC2_2", build_brandt(&c2(), 2).unwrap()),
        ("I2", build_symmetric_inverse_monoid(2).unwrap()),
        ("I3", build_symmetric_inverse_monoid(3).unwrap()),
        (
            "clifford3",
            build_clifford(
                &[vec![0, 0], vec![0, 1]],
                &[build_group(&[vec![0]]).unwrap(), c2()],
                &[(1, 0, vec![0, 0])],
            )
            .unwrap(),
        ),
        ("eunitary7", build_eunitary7().unwrap()),
        ("C2xchain2", direct_product(&c2(), &chain2()).unwrap()),
        ("chain2xchain2", direct_product(&chain2(), &chain2()).unwrap()),
        ("B2xC2", direct_product(&b2(), &c2()).unwrap()),
    ];
    let manifest = parse_manifest();
    builders
        .into_iter()
        .map(|(name, semigroup)| {
            let expected = manifest
                .iter()
                .find(|(n, _)| n == name)
                .unwrap_or_else(|| panic!("manifest entry missing for {name}"))
                .1
                .clone();
            CatalogEntry {
                name,
                semigroup,
                expected,
            }
        })
        .collect()
}

/// The catalog names, in catalog order.
pub fn names() -> Vec<&'static str> {
    catalog().into_iter().map(|e| e.name).collect()
}

/// Look up one entry by name.
pub fn by_name(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
