use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{LaurentPoly, QSqrtQ, Rational};
use crate::error::{Error, Result};

/// Dense matrix of Laurent polynomials over Q(√q).
#[derive(Clone, PartialEq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    q: u32,
    entries: Vec<LaurentPoly<QSqrtQ>>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize, q: u32) -> Self {
        LaurentMatrix { rows, cols, q, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize, q: u32) -> Self {
        let mut m = Self::zeros(n, n, q);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly<QSqrtQ>>>, q: u32) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Format("ragged matrix rows".into()));
        }
        Ok(LaurentMatrix { rows: r, cols: c, q, entries: rows.into_iter().flatten().collect() })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn radicand(&self) -> u32 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<QSqrtQ> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly<QSqrtQ>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<LaurentPoly<QSqrtQ>> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<LaurentPoly<QSqrtQ>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let mut out = LaurentMatrix::zeros(self.rows, rhs.cols, self.q.max(rhs.q));
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let acc = (0..self.cols).fold(LaurentPoly::zero(), |acc, k| {
                    &acc + &(self.get(i, k) * rhs.get(k, j))
                });
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `self · v` for a column of Laurent entries.
    pub fn apply(&self, v: &[LaurentPoly<QSqrtQ>]) -> Result<Vec<LaurentPoly<QSqrtQ>>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch { left: self.shape(), right: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(LaurentPoly::zero(), |acc, k| &acc + &(self.get(i, k) * &v[k]))
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == LaurentMatrix::identity(self.rows, self.q)
    }

    pub fn delete_row(&self, i: usize) -> LaurentMatrix {
        let rows = (0..self.rows).filter(|&r| r != i).map(|r| self.row(r)).collect();
        let mut m = LaurentMatrix::from_rows(rows, self.q).expect("rectangular");
        m.cols = self.cols;
        m
    }

    pub fn delete_col(&self, j: usize) -> LaurentMatrix {
        let rows = (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| c != j).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut m = LaurentMatrix::from_rows(rows, self.q).expect("rectangular");
        m.rows = self.rows;
        m.cols = self.cols - 1;
        m
    }

    /// Cofactor expansion along the first row; meant for the small `q × q`
    /// matrices that show up here.
    pub fn determinant(&self) -> Result<LaurentPoly<QSqrtQ>> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch { left: self.shape(), right: self.shape() });
        }
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> LaurentPoly<QSqrtQ> {
        match self.rows {
            0 => LaurentPoly::one(),
            1 => self.get(0, 0).clone(),
            n => {
                let minor_base = self.delete_row(0);
                (0..n).fold(LaurentPoly::zero(), |acc, j| {
                    let term = self.get(0, j) * &minor_base.delete_col(j).det_unchecked();
                    if j % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    }
                })
            }
        }
    }
}

impl std::fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LaurentMatrix {}x{} over Q(√{}) [", self.rows, self.cols, self.q)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Serialized as separate rational and `√q` coefficient grids, so the value
/// of entry `(i, j)` is `rational[i][j] + sqrt_q[i][j]·√q`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    q: u32,
    rational: Vec<Vec<LaurentPoly<Rational>>>,
    sqrt_q: Vec<Vec<LaurentPoly<Rational>>>,
}

impl Serialize for LaurentMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let grid = |f: fn(&QSqrtQ) -> Rational| -> Vec<Vec<LaurentPoly<Rational>>> {
            (0..self.rows).map(|i| self.row(i).iter().map(|e| e.map(f)).collect()).collect()
        };
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            q: self.q,
            rational: grid(|c| c.rat().clone()),
            sqrt_q: grid(|c| c.irr().clone()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let shape_ok = |g: &Vec<Vec<LaurentPoly<Rational>>>| {
            g.len() == repr.rows && g.iter().all(|r| r.len() == repr.cols)
        };
        if !shape_ok(&repr.rational) || !shape_ok(&repr.sqrt_q) {
            return Err(D::Error::custom("matrix grids do not match the declared shape"));
        }
        if repr.q == 0 {
            return Err(D::Error::custom("matrix radicand must be positive"));
        }
        let q = repr.q;
        let mut m = LaurentMatrix::zeros(repr.rows, repr.cols, q);
        for i in 0..repr.rows {
            for j in 0..repr.cols {
                let rat = repr.rational[i][j].map(|c| QSqrtQ::rational(c.clone()));
                let irr = repr.sqrt_q[i][j].map(|c| QSqrtQ::sqrt_multiple(c.clone(), q));
                m.set(i, j, &rat + &irr);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64, d: i64) -> LaurentPoly<QSqrtQ> {
        LaurentPoly::constant(QSqrtQ::rational(Rational::new(n, d)))
    }

    #[test]
    fn identity_product() {
        let m = LaurentMatrix::from_rows(vec![vec![c(1, 2), c(3, 1)], vec![c(0, 1), c(-1, 1)]], 2).unwrap();
        assert_eq!(LaurentMatrix::identity(2, 2).mul(&m).unwrap(), m);
        assert!(LaurentMatrix::identity(3, 2).is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn shape_errors() {
        let a = LaurentMatrix::zeros(2, 3, 2);
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch { .. })));
        assert!(a.determinant().is_err());
        assert!(LaurentMatrix::from_rows(vec![vec![c(1, 1)], vec![]], 2).is_err());
    }

    #[test]
    fn determinant_small() {
        let z = LaurentPoly::monomial(QSqrtQ::rational(Rational::one()), 1);
        let m = LaurentMatrix::from_rows(
            vec![vec![z.clone(), c(1, 1), c(0, 1)], vec![c(2, 1), c(1, 1), c(0, 1)], vec![c(0, 1), c(0, 1), c(3, 1)]],
            2,
        )
        .unwrap();
        // 3·(z − 2)
        let expected = &z.scale(&QSqrtQ::rational(Rational::from(3))) - &c(6, 1);
        assert_eq!(m.determinant().unwrap(), expected);
    }

    #[test]
    fn delete_row_and_col() {
        let m = LaurentMatrix::from_rows(vec![vec![c(1, 1), c(2, 1)], vec![c(3, 1), c(4, 1)], vec![c(5, 1), c(6, 1)]], 2)
            .unwrap();
        assert_eq!(m.delete_row(1).col(0), vec![c(1, 1), c(5, 1)]);
        let d = m.delete_col(0);
        assert_eq!(d.shape(), (3, 1));
        assert_eq!(d.col(0), vec![c(2, 1), c(4, 1), c(6, 1)]);
    }

    #[test]
    fn json_round_trip() {
        let s = LaurentPoly::constant(QSqrtQ::new(Rational::new(1, 3), Rational::new(-1, 2), 2));
        let m = LaurentMatrix::from_rows(vec![vec![s, c(0, 1)]], 2).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"rows":1,"cols":2,"q":2,"rational":[[{"0":"1/3"},{}]],"sqrt_q":[[{"0":"-1/2"},{}]]}"#
        );
        let back: LaurentMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
