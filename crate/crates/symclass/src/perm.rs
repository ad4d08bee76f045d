//! Permutations in one-line notation.

use crate::partition::Partition;

/// A permutation of {1..n}, stored 0-based internally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 1-based one-line images.
    pub fn from_one_line(images: &[usize]) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut v = Vec::with_capacity(n);
        for &im in images {
            assert!(im >= 1 && im <= n, "image {} out of range 1..={}", im, n);
            assert!(!seen[im - 1], "duplicate image {}", im);
            seen[im - 1] = true;
            v.push((im - 1) as u8);
        }
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 0-based image.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &im) in self.0.iter().enumerate() {
            v[im as usize] = i as u8;
        }
        Perm(v)
    }

    /// Transposition (i j), 0-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        assert!(i < n && j < n && i != j);
        let mut v: Vec<u8> = (0..n as u8).collect();
        v.swap(i, j);
        Perm(v)
    }

    /// Cycles in a canonical order (each cycle starts at its smallest
    /// element, cycles sorted by that element), 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.image(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.image(cur);
            }
            out.push(cyc);
        }
        out
    }

    /// From 0-based cycles; omitted elements are fixed points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Perm {
        let mut v: Vec<u8> = (0..n as u8).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w];
                let to = cyc[(w + 1) % cyc.len()];
                v[from] = to as u8;
            }
        }
        // Validate: the assignments must form a bijection.
        let mut seen = vec![false; n];
        for &im in &v {
            assert!(!seen[im as usize], "cycles overlap");
            seen[im as usize] = true;
        }
        Perm(v)
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }
}

/// All permutations of degree n in lexicographic one-line order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut v: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(v.clone()));
        // next lexicographic permutation
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}
