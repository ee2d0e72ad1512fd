//! Dense symmetric eigensolver: Householder reduction to tridiagonal form
//! followed by the implicit-shift QL iteration (the EISPACK tred2/tql2
//! pair). Eigenvalues come back in ascending order.

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    n: usize,
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Column-major eigenvectors (`vectors[k * n + i]` is entry `i` of the
    /// `k`-th eigenvector), present only when requested.
    vectors: Option<Vec<f64>>,
    /// Total QL iterations spent.
    pub iterations: usize,
}

impl SymmetricEigen {
    /// Decomposes the `n x n` row-major symmetric `matrix`. Only the lower
    /// triangle is read.
    pub fn new(matrix: &[f64], n: usize, with_vectors: bool) -> Self {
        assert_eq!(matrix.len(), n * n, "matrix is not {n} x {n}");
        if n == 0 {
            return SymmetricEigen {
                n,
                values: Vec::new(),
                vectors: with_vectors.then(Vec::new),
                iterations: 0,
            };
        }
        let mut v = matrix.to_vec();
        let mut d = vec![0.0; n];
        let mut e = vec![0.0; n];
        tridiagonalize(&mut v, &mut d, &mut e, n, with_vectors);
        let iterations = tridiagonal_ql(&mut d, &mut e, with_vectors.then_some(&mut v[..]), n);

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
        let values = order.iter().map(|&k| d[k]).collect();
        let vectors = with_vectors.then(|| {
            let mut cols = vec![0.0; n * n];
            for (slot, &k) in order.iter().enumerate() {
                for i in 0..n {
                    cols[slot * n + i] = v[i * n + k];
                }
            }
            cols
        });
        SymmetricEigen {
            n,
            values,
            vectors,
            iterations,
        }
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// The `k`-th eigenvector in ascending eigenvalue order.
    pub fn vector(&self, k: usize) -> Option<&[f64]> {
        let n = self.n;
        self.vectors.as_ref().map(|v| &v[k * n..(k + 1) * n])
    }
}

/// Householder reduction. On exit `d` holds the diagonal and `e[1..]` the
/// subdiagonal; `v` holds the accumulated orthogonal transform if requested.
fn tridiagonalize(v: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize, accumulate: bool) {
    let at = |i: usize, j: usize| i * n + j;

    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for dk in &d[..i] {
            scale += dk.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for dk in &mut d[..i] {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in &mut e[..i] {
                *ej = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                for k in j + 1..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    if accumulate {
        for i in 0..n - 1 {
            v[at(n - 1, i)] = v[at(i, i)];
            v[at(i, i)] = 1.0;
            let h = d[i + 1];
            if h != 0.0 {
                for k in 0..=i {
                    d[k] = v[at(k, i + 1)] / h;
                }
                for j in 0..=i {
                    let mut g = 0.0;
                    for k in 0..=i {
                        g += v[at(k, i + 1)] * v[at(k, j)];
                    }
                    for k in 0..=i {
                        v[at(k, j)] -= g * d[k];
                    }
                }
            }
            for k in 0..=i {
                v[at(k, i + 1)] = 0.0;
            }
        }
        for j in 0..n {
            d[j] = v[at(n - 1, j)];
            v[at(n - 1, j)] = 0.0;
        }
        v[at(n - 1, n - 1)] = 1.0;
    } else {
        for j in 0..n {
            d[j] = v[at(j, j)];
        }
    }
    e[0] = 0.0;
}

const MAX_QL_ITERATIONS_PER_VALUE: usize = 64;

/// Implicit-shift QL on the tridiagonal `(d, e)`; rotations are applied to
/// `v` when given. Returns the number of iterations.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], mut v: Option<&mut [f64]>, n: usize) -> usize {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let mut iterations = 0;

    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                iterations += 1;

                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in &mut d[l + 2..] {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    if let Some(v) = v.as_deref_mut() {
                        for k in 0..n {
                            let h = v[k * n + i + 1];
                            v[k * n + i + 1] = s * v[k * n + i] + c * h;
                            v[k * n + i] = c * v[k * n + i] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 || sweeps >= MAX_QL_ITERATIONS_PER_VALUE {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    iterations
}
