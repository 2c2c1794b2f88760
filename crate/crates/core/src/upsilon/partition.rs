use serde::{Deserialize, Serialize};

/// Disjoint-set forest with path halving and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns true if the two were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    /// Freezes into classes numbered by their least element.
    pub fn resolve(mut self) -> CosetPartition {
        let n = self.len();
        let mut class_id = vec![usize::MAX; n];
        let mut root_class = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for (i, class) in class_id.iter_mut().enumerate() {
            let r = self.find(i);
            if root_class[r] == usize::MAX {
                root_class[r] = representatives.len();
                representatives.push(i);
                sizes.push(0);
            }
            *class = root_class[r];
            sizes[root_class[r]] += 1;
        }
        CosetPartition {
            class_of: class_id,
            representatives,
            sizes,
        }
    }
}

/// A partition of element indices into classes; class `c` has least member
/// `representatives[c]`, and classes are numbered in increasing order of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetPartition {
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    sizes: Vec<usize>,
}

impl CosetPartition {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c].push(i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_classes() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(4, 1));
        assert!(uf.union(5, 3));
        assert!(!uf.union(1, 4));
        uf.union(3, 4);
        let p = uf.resolve();
        assert_eq!(p.class_count(), 3);
        assert_eq!(p.representatives(), &[0, 1, 2]);
        assert_eq!(p.classes(), vec![vec![0], vec![1, 3, 4, 5], vec![2]]);
        assert_eq!(p.sizes(), &[1, 4, 1]);
        assert_eq!(UnionFind::new(0).resolve().class_count(), 0);
    }
}
