//! Integer symplectic matrices and the homology action of Dehn twists.
//!
//! Coordinates on `Z^{2g}` are `(a_1..a_g, b_1..b_g)` and the symplectic form
//! is `<x, y> = x^T J y` with `J = [[0, I], [-I, 0]]`. A right-handed Dehn
//! twist about a curve of class `c` acts by the transvection
//! `x -> x + <x, c> c`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `<x, y> = x^T J y`.
pub fn symplectic_form(x: &[i64], y: &[i64]) -> i64 {
    let g = x.len() / 2;
    (0..g).map(|i| x[i] * y[g + i] - x[g + i] * y[i]).sum()
}

/// Row-major `2g x 2g` integer matrix with `M^T J M = J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SympMatrix {
    genus: usize,
    entries: Vec<i64>,
}

impl SympMatrix {
    pub fn new(genus: usize, entries: Vec<i64>) -> Result<Self> {
        let dim = 2 * genus;
        if genus == 0 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: 0,
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if !preserves_form(genus, &entries) {
            return Err(Error::NotSymplectic);
        }
        Ok(SympMatrix { genus, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                expected: dim.max(2).next_multiple_of(2),
                found: dim,
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        Self::new(dim / 2, rows.concat())
    }

    pub fn identity(genus: usize) -> Self {
        let dim = 2 * genus;
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        SympMatrix { genus, entries }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim() + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim())
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.genus)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SympMatrix) -> Result<SympMatrix> {
        if self.genus != rhs.genus {
            return Err(Error::GenusMismatch(self.genus, rhs.genus));
        }
        let n = self.dim();
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.get(i, k) as i128 * rhs.get(k, j) as i128;
                }
                entries[i * n + j] = i64::try_from(acc).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(SympMatrix {
            genus: self.genus,
            entries,
        })
    }

    /// `M^{-1} = -J M^T J`, which in blocks sends `[[A, B], [C, D]]` to
    /// `[[D^T, -B^T], [-C^T, A^T]]`.
    pub fn inverse(&self) -> SympMatrix {
        let g = self.genus;
        let n = self.dim();
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                // entry (i, j) of the inverse comes from entry (j', i') of M
                let (src_row, src_col, sign) = match (i < g, j < g) {
                    (true, true) => (j + g, i + g, 1),
                    (true, false) => (j - g, i + g, -1),
                    (false, true) => (j + g, i - g, -1),
                    (false, false) => (j - g, i - g, 1),
                };
                entries[i * n + j] = sign * self.get(src_row, src_col);
            }
        }
        SympMatrix { genus: g, entries }
    }

    /// Image of a column vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

fn preserves_form(genus: usize, entries: &[i64]) -> bool {
    let n = 2 * genus;
    let col = |j: usize| -> Vec<i128> { (0..n).map(|i| entries[i * n + j] as i128).collect() };
    let form = |x: &[i128], y: &[i128]| -> i128 {
        (0..genus)
            .map(|i| x[i] * y[genus + i] - x[genus + i] * y[i])
            .sum()
    };
    let cols: Vec<Vec<i128>> = (0..n).map(col).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let expected = match (i < genus, j < genus) {
                (true, false) if j == i + genus => 1,
                (false, true) if i == j + genus => -1,
                _ => 0,
            };
            form(&cols[i], &cols[j]) == expected
        })
    })
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let width = self
            .entries
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
            if i + 1 < rows.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Rejects zero and non-primitive homology classes.
pub fn check_twist_vector(genus: usize, c: &[i64]) -> Result<()> {
    if c.len() != 2 * genus {
        return Err(Error::DimensionMismatch {
            expected: 2 * genus,
            found: c.len(),
        });
    }
    let gcd = c.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    match gcd {
        0 => Err(Error::ZeroVector),
        1 => Ok(()),
        _ => Err(Error::NotPrimitive(c.to_vec())),
    }
}

/// Matrix of `x -> x + <x, c> c`, i.e. `I + c (J c)^T`.
pub fn transvection(genus: usize, c: &[i64]) -> Result<SympMatrix> {
    check_twist_vector(genus, c)?;
    let n = 2 * genus;
    // (J c)_j = c_{g+j} for j < g, -c_{j-g} otherwise
    let jc: Vec<i64> = (0..n)
        .map(|j| {
            if j < genus {
                c[genus + j]
            } else {
                -c[j - genus]
            }
        })
        .collect();
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let off = c[i].checked_mul(jc[j]).ok_or(Error::Overflow)?;
            entries[i * n + j] = off + i64::from(i == j);
        }
    }
    Ok(SympMatrix { genus, entries })
}

/// A word of right-handed Dehn twists given by the homology classes of their
/// curves, in the order the twists are applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistWord {
    genus: usize,
    twists: Vec<Vec<i64>>,
}

impl TwistWord {
    pub fn new(genus: usize, twists: Vec<Vec<i64>>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: 0,
            });
        }
        for c in &twists {
            check_twist_vector(genus, c)?;
        }
        Ok(TwistWord { genus, twists })
    }

    /// `(t_a t_b)^{6n}` on the torus with `a = (1, 0)`, `b = (0, 1)`; the
    /// monodromy of the elliptic fibration on `E(n)`.
    pub fn torus_calibration(n: usize) -> Self {
        let twists = std::iter::repeat_n([vec![1, 0], vec![0, 1]], 6 * n)
            .flatten()
            .collect();
        TwistWord { genus: 1, twists }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn twists(&self) -> &[Vec<i64>] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    /// Serializes in the word file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.genus);
        for c in &self.twists {
            let cells: Vec<String> = c.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Word file format: the first meaningful line is the genus `g`, every
/// following line holds `2g` integers for one twist. Blank lines and lines
/// starting with `#` are skipped. Errors carry 1-based line numbers.
impl FromStr for TwistWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::WordParse { line, message };
        let mut genus: Option<usize> = None;
        let mut twists = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(g) = genus else {
                let g: usize = line
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("expected genus, found {line:?}")))?;
                if g == 0 {
                    return Err(parse_err(line_no, "genus must be at least 1".into()));
                }
                genus = Some(g);
                continue;
            };
            let c = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| parse_err(line_no, format!("not an integer: {tok:?}")))
                })
                .collect::<Result<Vec<i64>>>()?;
            check_twist_vector(g, &c).map_err(|e| parse_err(line_no, e.to_string()))?;
            twists.push(c);
        }

        let genus = genus
            .ok_or_else(|| parse_err(text.lines().count().max(1), "missing genus line".into()))?;
        Ok(TwistWord { genus, twists })
    }
}
