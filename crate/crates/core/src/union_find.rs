/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

#[cfg(test)]
mod tests {
    use super::DisjointSet;

    #[test]
    fn unions_merge_classes() {
        let mut ds = DisjointSet::new(6);
        ds.union(0, 1);
        ds.union(4, 5);
        ds.union(1, 5);
        assert_eq!(ds.find(0), ds.find(4));
        assert_ne!(ds.find(2), ds.find(0));
        assert_ne!(ds.find(2), ds.find(3));
    }
}
