//! Equivalence relations on `0..n`.
//!
//! [`DisjointSets`] is the mutable union-find structure used while closing a
//! relation; [`Partition`] is the frozen result, stored as a vector of
//! canonical class labels. Labels are canonical in the sense that classes are
//! numbered in order of first appearance, so two partitions are equal as
//! relations if and only if their label vectors are equal. That makes
//! [`Partition`] directly usable as a hash-map key for deduplication.

/// Union-find over `0..n` with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of distinct sets.
    pub fn count(&self) -> usize {
        self.sets
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merge the sets containing `a` and `b`; returns `true` if they were
    /// previously distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// An equivalence relation on `0..n` in canonical form: `labels[x]` is the
/// index of the class of `x`, and classes are numbered by first appearance.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    labels: Vec<u32>,
    classes: u32,
}

impl Partition {
    /// The finest partition: every element is its own class.
    pub fn singletons(n: usize) -> Self {
        Partition {
            labels: (0..n as u32).collect(),
            classes: n as u32,
        }
    }

    /// The coarsest partition: one class containing everything.
    pub fn universal(n: usize) -> Self {
        Partition {
            labels: vec![0; n],
            classes: if n == 0 { 0 } else { 1 },
        }
    }

    /// Canonicalize an arbitrary labelling (equal raw labels = same class).
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut remap: Vec<Option<u32>> = Vec::new();
        let mut lookup = std::collections::HashMap::new();
        let mut labels = Vec::with_capacity(raw.len());
        let mut next = 0u32;
        for &r in raw {
            let l = *lookup.entry(r).or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
            labels.push(l);
        }
        let _ = &mut remap;
        Partition {
            labels,
            classes: next,
        }
    }

    /// Freeze a union-find structure into canonical form.
    pub fn from_dsu(dsu: &mut DisjointSets) -> Self {
        let n = dsu.len();
        let mut remap: Vec<u32> = vec![u32::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0u32;
        for x in 0..n {
            let r = dsu.find(x);
            if remap[r] == u32::MAX {
                remap[r] = next;
                next += 1;
            }
            labels.push(remap[r]);
        }
        Partition {
            labels,
            classes: next,
        }
    }

    /// Build from an explicit list of classes covering `0..n` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Self {
        let mut raw = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                assert!(raw[x] == usize::MAX, "element {x} listed twice");
                raw[x] = i;
            }
        }
        assert!(
            raw.iter().all(|&l| l != usize::MAX),
            "classes do not cover 0..{n}"
        );
        Partition::from_labels(&raw)
    }

    /// Number of underlying elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes as usize
    }

    #[inline]
    pub fn label_of(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_singletons(&self) -> bool {
        self.classes as usize == self.labels.len()
    }

    pub fn is_universal(&self) -> bool {
        self.classes <= 1
    }

    /// Classes in label order; within a class, elements ascend.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes as usize];
        for (x, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(x);
        }
        out
    }

    /// Common refinement: `a (self ∧ other) b` iff both relate `a` and `b`.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut lookup = std::collections::HashMap::new();
        let mut labels = Vec::with_capacity(self.len());
        let mut next = 0u32;
        for x in 0..self.len() {
            let key = (self.labels[x], other.labels[x]);
            let l = *lookup.entry(key).or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
            labels.push(l);
        }
        Partition {
            labels,
            classes: next,
        }
    }

    /// Is every class of `self` contained in a class of `coarser`?
    /// Equivalently: `self ⊆ coarser` as sets of pairs.
    pub fn refines(&self, coarser: &Partition) -> bool {
        assert_eq!(self.len(), coarser.len());
        let mut image: Vec<u32> = vec![u32::MAX; self.classes as usize];
        for x in 0..self.len() {
            let from = self.labels[x] as usize;
            let to = coarser.labels[x];
            if image[from] == u32::MAX {
                image[from] = to;
            } else if image[from] != to {
                return false;
            }
        }
        true
    }

    /// Restriction to a subset, as a partition of `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let raw: Vec<usize> = subset.iter().map(|&x| self.labels[x] as usize).collect();
        Partition::from_labels(&raw)
    }

    /// A generating set of pairs: each element paired with the first element
    /// of its class. Closing these pairs reproduces the partition.
    pub fn generating_pairs(&self) -> Vec<(usize, usize)> {
        let mut first: Vec<usize> = vec![usize::MAX; self.classes as usize];
        let mut pairs = Vec::new();
        for (x, &l) in self.labels.iter().enumerate() {
            let l = l as usize;
            if first[l] == usize::MAX {
                first[l] = x;
            } else {
                pairs.push((first[l], x));
            }
        }
        pairs
    }
}
