//! Finite groups given by multiplication tables.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
}

/// A finite group on the index set `0..order`; `table[g][h]` is the index of `gh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = labels.len();
        let bad = |m: String| Err(GroupError::InvalidGroupTable(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad(format!("table must be {n}x{n} with entries below {n}"));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return bad(format!("duplicate label {l}"));
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return bad("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity) {
                Some(h) => inverses.push(h),
                None => return bad(format!("{} has no inverse", labels[g])),
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return bad(format!("not associative at ({}, {}, {})", labels[g], labels[h], labels[k]));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverses })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with labels `"0"`, …, `"n-1"`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(labels, table).expect("cyclic table is a group")
    }

    /// Group of permutations closed under composition, `(στ)(i) = σ(τ(i))`.
    pub fn from_permutations(labels: Vec<String>, perms: &[Vec<usize>]) -> Result<Self, GroupError> {
        let find = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(perms.len());
        for s in perms {
            let mut row = Vec::with_capacity(perms.len());
            for t in perms {
                let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                row.push(find(&st).ok_or_else(|| GroupError::InvalidGroupTable("not closed".into()))?);
            }
            table.push(row);
        }
        Self::from_table(labels, table)
    }

    /// The symmetric group on three letters in cycle notation.
    pub fn symmetric3() -> Self {
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].map(String::from).to_vec();
        let perms = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        Self::from_permutations(labels, &perms).expect("S3 is a group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// `h g h⁻¹`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Whether `subset` is a normal subgroup.
    pub fn is_normal_subgroup(&self, subset: &[usize]) -> bool {
        subset.contains(&self.identity)
            && subset.iter().all(|&a| subset.iter().all(|&b| subset.contains(&self.mul(a, self.inv(b)))))
            && self.elements().all(|g| subset.iter().all(|&a| subset.contains(&self.conjugate(g, a))))
    }

    /// The subgroup on `subset`, labels inherited.
    pub fn subgroup(&self, subset: &[usize]) -> Result<FiniteGroup, GroupError> {
        let labels = subset.iter().map(|&a| self.labels[a].clone()).collect();
        let pos = |x: usize| subset.iter().position(|&a| a == x);
        let table = subset
            .iter()
            .map(|&a| {
                subset
                    .iter()
                    .map(|&b| pos(self.mul(a, b)).ok_or_else(|| GroupError::InvalidGroupTable("subset not closed".into())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiniteGroup::from_table(labels, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        let a = s3.index_of("(12)").unwrap();
        let b = s3.index_of("(123)").unwrap();
        assert_ne!(s3.mul(a, b), s3.mul(b, a));
        assert_eq!(s3.label(s3.mul(b, b)), "(132)");
        assert!(s3.is_normal_subgroup(&[0, 4, 5]));
        assert!(!s3.is_normal_subgroup(&[0, 1]));
    }

    #[test]
    fn rejects_non_groups() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table(labels.clone(), vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table(labels, vec![vec![0, 1]]).is_err());
    }
}
