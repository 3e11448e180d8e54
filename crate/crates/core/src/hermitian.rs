//! Hermitian matrices, eigendecompositions, matrix functions, and Haar
//! sampling. Everything downstream is built on this module.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::tol::{self, Tolerances};

/// Complex square matrix used throughout the crate.
pub type CMatrix = DMatrix<Complex64>;

/// Real vector sorted in non-increasing order (state eigenvalues ρ↓,
/// eigen-energies E↓), with its sum recorded at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    sum: f64,
}

impl Spectrum {
    /// Sorts the input in non-increasing order.
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("non-finite eigenvalue"));
        let sum = values.iter().sum();
        Self { values, sum }
    }

    /// Accepts an already non-increasing vector; errors otherwise.
    pub fn from_sorted(values: Vec<f64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "spectrum is not sorted in non-increasing order".into(),
            ));
        }
        let sum = values.iter().sum();
        Ok(Self { values, sum })
    }

    pub fn uniform(dim: usize) -> Self {
        Self::from_unsorted(vec![1.0 / dim as f64; dim])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }

    /// Cumulative sums Σ_{i≤k}, length d.
    pub fn partial_sums(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.values
            .iter()
            .map(|v| {
                acc += v;
                acc
            })
            .collect()
    }
}

/// A d×d complex matrix kept exactly conjugate-symmetric.
///
/// Construction symmetrizes `(M + M†)/2`; inputs whose asymmetry exceeds the
/// construction tolerance are rejected instead of silently repaired.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: CMatrix,
}

impl HermitianMatrix {
    pub fn new(data: CMatrix) -> Result<Self> {
        Self::with_tolerances(data, &Tolerances::default())
    }

    pub fn with_tolerances(data: CMatrix, tols: &Tolerances) -> Result<Self> {
        let (rows, cols) = data.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
        }
        let mut asymmetry = 0.0f64;
        for i in 0..rows {
            for j in i..cols {
                let diff = data[(i, j)] - data[(j, i)].conj();
                asymmetry = asymmetry.max(diff.norm());
            }
        }
        if asymmetry > tols.construction {
            return Err(Error::NotHermitian {
                asymmetry,
                limit: tols.construction,
            });
        }
        let sym = CMatrix::from_fn(rows, cols, |i, j| {
            (data[(i, j)] + data[(j, i)].conj()) * Complex64::new(0.5, 0.0)
        });
        Ok(Self { dim: rows, data: sym })
    }

    /// Builds from row-major nested rows (the JSON wire layout).
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::NotSquare {
                rows: d,
                cols: rows.iter().map(|r| r.len()).max().unwrap_or(0),
            });
        }
        Ok(Self::new(CMatrix::from_fn(d, d, |i, j| rows[i][j]))?)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d = diag.len();
        assert!(d >= 1, "dimension must be at least 1");
        Self {
            dim: d,
            data: CMatrix::from_fn(d, d, |i, j| {
                if i == j {
                    Complex64::new(diag[i], 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_real_diagonal(&vec![0.0; dim])
    }

    pub fn scaled_identity(dim: usize, c: f64) -> Self {
        Self::from_real_diagonal(&vec![c; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &CMatrix {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.data[(i, i)].re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.norm()
    }

    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        (&self.data - &other.data).norm()
    }

    /// tr(AB), real for Hermitian A and B.
    pub fn trace_product(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += (self.data[(i, j)] * other.data[(j, i)]).re;
            }
        }
        Ok(acc)
    }

    /// Σ|λ_i|, the trace norm.
    pub fn one_norm(&self) -> Result<f64> {
        Ok(self.eigh()?.values.values().iter().map(|v| v.abs()).sum())
    }

    /// Projector onto the strictly positive eigenspace.
    pub fn positive_projector(&self) -> Result<Self> {
        self.herm_func(|x| if x > 0.0 { 1.0 } else { 0.0 })
    }

    /// Frobenius-nearest matrix with spectrum inside `[lo, hi]`.
    pub fn clip_eigenvalues(&self, lo: f64, hi: f64) -> Result<Self> {
        self.herm_func(|x| x.clamp(lo, hi))
    }

    /// Hermitian eigendecomposition with eigenvalues in non-increasing order
    /// and eigenvector columns aligned with them.
    pub fn eigh(&self) -> Result<EigenDecomposition> {
        eigh(self)
    }

    /// `V diag(f(λ)) V†` for a scalar function `f`, applied on the spectrum.
    pub fn herm_func(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        herm_func(self, f)
    }
}

/// Eigendecomposition of a [`HermitianMatrix`].
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Non-increasing eigenvalues.
    pub values: Spectrum,
    /// Unitary whose columns are eigenvectors aligned with `values`.
    pub vectors: CMatrix,
}

impl EigenDecomposition {
    /// `V diag(g) V†` for real `g` aligned with the eigenvector columns.
    pub fn assemble(&self, diagonal: &[f64]) -> CMatrix {
        let d = self.values.len();
        debug_assert_eq!(diagonal.len(), d);
        let mut scaled = self.vectors.clone();
        for (j, g) in diagonal.iter().enumerate() {
            let mut col = scaled.column_mut(j);
            col *= Complex64::new(*g, 0.0);
        }
        scaled * self.vectors.adjoint()
    }
}

/// Eigendecomposition with sorted (non-increasing) eigenvalues.
///
/// Fails with a numerical-failure error when the iteration does not converge
/// or the reconstruction residual exceeds the tolerance.
pub fn eigh(m: &HermitianMatrix) -> Result<EigenDecomposition> {
    let d = m.dim();
    let max_iter = 40 * d + 400;
    let se: SymmetricEigen<Complex64, nalgebra::Dyn> =
        SymmetricEigen::try_new(m.data.clone(), f64::EPSILON, max_iter).ok_or(
            Error::EighFailed {
                dim: d,
                residual: None,
            },
        )?;

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[b]
            .partial_cmp(&se.eigenvalues[a])
            .expect("non-finite eigenvalue")
    });
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(d, d);
    for (new_col, &old_col) in order.iter().enumerate() {
        vectors.set_column(new_col, &se.eigenvectors.column(old_col));
    }

    let decomposition = EigenDecomposition {
        values: Spectrum::from_sorted(values)?,
        vectors,
    };

    let tols = Tolerances::default();
    let rebuilt = decomposition.assemble(decomposition.values.values());
    let residual = (&rebuilt - &m.data).norm();
    let limit = tols.reconstruction * m.frobenius_norm().max(1.0);
    if residual > limit {
        return Err(Error::EighFailed {
            dim: d,
            residual: Some(residual),
        });
    }
    let gram = decomposition.vectors.adjoint() * &decomposition.vectors;
    let mut unitarity = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            unitarity = unitarity.max((gram[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    if unitarity > tol::UNITARITY {
        return Err(Error::EighFailed {
            dim: d,
            residual: Some(unitarity),
        });
    }
    Ok(decomposition)
}

/// Applies a scalar function to the spectrum: `V diag(f(λ)) V†`.
///
/// `f` must be defined (finite) at every eigenvalue of `m`.
pub fn herm_func(m: &HermitianMatrix, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
    let decomposition = m.eigh()?;
    let mut mapped = Vec::with_capacity(decomposition.values.len());
    for &lambda in decomposition.values.values() {
        let y = f(lambda);
        if !y.is_finite() {
            return Err(Error::FunctionDomain { eigenvalue: lambda });
        }
        mapped.push(y);
    }
    HermitianMatrix::new(decomposition.assemble(&mapped))
}

/// d×d matrix of standard complex Gaussians (variance 1 per complex entry).
pub fn complex_ginibre(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let scale = 1.0 / f64::sqrt(2.0);
    CMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re * scale, im * scale)
    })
}

/// Haar-random unitary via QR of a complex Ginibre matrix with the phase-fix
/// convention (R's diagonal made positive real).
pub fn sample_haar_unitary(dim: usize, seed: u64) -> CMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_haar_unitary_with(dim, &mut rng)
}

/// Same as [`sample_haar_unitary`] but drawing from a caller-owned stream.
pub fn sample_haar_unitary_with(dim: usize, rng: &mut impl Rng) -> CMatrix {
    assert!(dim >= 1, "dimension must be at least 1");
    let g = complex_ginibre(dim, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            rjj / rjj.norm()
        };
        let mut col = q.column_mut(j);
        col *= phase;
    }
    q
}

/// Row-major nesting of a complex matrix with `[re, im]` entry pairs — the
/// JSON wire layout.
pub fn matrix_to_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

/// Max-entry deviation of `U†U` from the identity.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let d = u.nrows();
    let gram = u.adjoint() * u;
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((gram[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}
