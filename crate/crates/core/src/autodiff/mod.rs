//! Minimal reverse-mode differentiation over dense row-major tensors.
//!
//! A [`Graph`] is a tape: every op appends a node holding its forward value
//! and enough saved state to run its vector-Jacobian product. Graphs are
//! rebuilt per batch. Leaves created with [`Graph::param`] receive gradients
//! from [`Graph::backward`].

mod gradcheck;
mod scalar;

use std::rc::Rc;

use rand::Rng;

pub use gradcheck::{grad_check, GradCheck};
pub use scalar::Scalar;

use crate::{Error, Result};

pub const LAYER_NORM_EPS: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::shape("tensor", &shape, &[data.len()]));
        }
        Ok(Tensor { shape, data })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape,
            data: vec![T::ZERO; n],
        }
    }

    pub fn filled(shape: Vec<usize>, value: T) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape,
            data: vec![value; n],
        }
    }

    pub fn scalar(value: T) -> Self {
        Tensor {
            shape: vec![],
            data: vec![value],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Size of the last dimension (1 for scalars).
    pub fn last_dim(&self) -> usize {
        self.shape.last().copied().unwrap_or(1)
    }

    pub fn cast<U: Scalar>(&self) -> Tensor<U> {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| U::from_f64(v.to_f64())).collect(),
        }
    }
}

/// Handle to a node in a [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(usize);

impl Var {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug)]
enum Op<T> {
    Leaf,
    MatMul(Var, Var),
    MatMulNt(Var, Var),
    BatchMatMul(Var, Var),
    BatchMatMulNt(Var, Var),
    Transpose(Var),
    Add(Var, Var),
    Sub(Var, Var),
    Mul(Var, Var),
    Scale(Var, T),
    AddScalar(Var),
    Sum(Var),
    Sqrt(Var),
    Gelu(Var),
    Softmax(Var),
    LayerNorm {
        x: Var,
        gamma: Var,
        beta: Var,
        xhat: Vec<T>,
        rstd: Vec<T>,
    },
    Embedding {
        table: Var,
        ids: Vec<u32>,
    },
    CrossEntropy {
        logits: Var,
        targets: Vec<Option<u32>>,
        probs: Vec<T>,
        count: usize,
    },
    ConcatRows(Vec<Var>),
    MaskedFill {
        x: Var,
        mask: Rc<[bool]>,
    },
    Dropout {
        x: Var,
        keep: Vec<T>,
    },
    SplitHeads {
        x: Var,
        batch: usize,
        seq: usize,
        heads: usize,
    },
    MergeHeads {
        x: Var,
        batch: usize,
        seq: usize,
        heads: usize,
    },
}

struct Node<T> {
    value: Tensor<T>,
    op: Op<T>,
    needs_grad: bool,
}

/// Tape of op records in creation (topological) order.
pub struct Graph<T> {
    nodes: Vec<Node<T>>,
    grads: Vec<Option<Vec<T>>>,
}

impl<T: Scalar> Default for Graph<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// `out (+)= A·B` for row-major operands, optionally read transposed:
/// `a_t` means `a` is stored as `[k, m]`, `b_t` means `b` is stored `[n, k]`.
#[allow(clippy::too_many_arguments)]
fn gemm<T: Scalar>(
    m: usize,
    k: usize,
    n: usize,
    a: &[T],
    a_t: bool,
    b: &[T],
    b_t: bool,
    out: &mut [T],
    accumulate: bool,
) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    if m == 0 || n == 0 {
        return;
    }
    let (rsa, csa) = if a_t { (1, m as isize) } else { (k as isize, 1) };
    let (rsb, csb) = if b_t { (1, k as isize) } else { (n as isize, 1) };
    let beta = if accumulate { T::ONE } else { T::ZERO };
    // SAFETY: slice lengths are checked above against the dimensions.
    unsafe {
        T::gemm(
            m,
            k,
            n,
            T::ONE,
            a.as_ptr(),
            rsa,
            csa,
            b.as_ptr(),
            rsb,
            csb,
            beta,
            out.as_mut_ptr(),
            n as isize,
            1,
        );
    }
}

fn gelu_parts<T: Scalar>(x: T) -> (T, T) {
    let c = T::from_f64((2.0 / std::f64::consts::PI).sqrt());
    let a = T::from_f64(0.044715);
    let half = T::from_f64(0.5);
    let u = c * (x + a * x * x * x);
    let t = u.tanh();
    let y = half * x * (T::ONE + t);
    let dy = half * (T::ONE + t) + half * x * (T::ONE - t * t) * c * (T::ONE + T::from_f64(3.0) * a * x * x);
    (y, dy)
}

impl<T: Scalar> Graph<T> {
    pub fn new() -> Self {
        Graph {
            nodes: Vec::new(),
            grads: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn push(&mut self, value: Tensor<T>, op: Op<T>, needs_grad: bool) -> Var {
        self.nodes.push(Node {
            value,
            op,
            needs_grad,
        });
        Var(self.nodes.len() - 1)
    }

    fn needs(&self, v: Var) -> bool {
        self.nodes[v.0].needs_grad
    }

    pub fn value(&self, v: Var) -> &Tensor<T> {
        &self.nodes[v.0].value
    }

    pub fn shape(&self, v: Var) -> &[usize] {
        &self.nodes[v.0].value.shape
    }

    /// Gradient of the last [`Graph::backward`] loss with respect to `v`.
    pub fn grad(&self, v: Var) -> Option<&[T]> {
        self.grads.get(v.0).and_then(|g| g.as_deref())
    }

    /// Trainable leaf.
    pub fn param(&mut self, t: Tensor<T>) -> Var {
        self.push(t, Op::Leaf, true)
    }

    /// Constant leaf; never receives a gradient.
    pub fn constant(&mut self, t: Tensor<T>) -> Var {
        self.push(t, Op::Leaf, false)
    }

    /// `[..., k] × [k, n] → [..., n]`.
    pub fn matmul(&mut self, a: Var, b: Var) -> Result<Var> {
        let (sa, sb) = (self.shape(a), self.shape(b));
        if sa.is_empty() || sb.len() != 2 || sa[sa.len() - 1] != sb[0] {
            return Err(Error::shape("matmul", sa, sb));
        }
        let (k, n) = (sb[0], sb[1]);
        let m = self.value(a).len() / k.max(1);
        let mut shape = sa[..sa.len() - 1].to_vec();
        shape.push(n);
        let mut out = vec![T::ZERO; m * n];
        gemm(m, k, n, &self.value(a).data, false, &self.value(b).data, false, &mut out, false);
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor { shape, data: out }, Op::MatMul(a, b), ng))
    }

    /// `[..., k] × [n, k]ᵀ → [..., n]`.
    pub fn matmul_nt(&mut self, a: Var, b: Var) -> Result<Var> {
        let (sa, sb) = (self.shape(a), self.shape(b));
        if sa.is_empty() || sb.len() != 2 || sa[sa.len() - 1] != sb[1] {
            return Err(Error::shape("matmul_nt", sa, sb));
        }
        let (n, k) = (sb[0], sb[1]);
        let m = self.value(a).len() / k.max(1);
        let mut shape = sa[..sa.len() - 1].to_vec();
        shape.push(n);
        let mut out = vec![T::ZERO; m * n];
        gemm(m, k, n, &self.value(a).data, false, &self.value(b).data, true, &mut out, false);
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor { shape, data: out }, Op::MatMulNt(a, b), ng))
    }

    /// `[g, m, k] × [g, n, k]ᵀ → [g, m, n]`.
    pub fn bmm_nt(&mut self, a: Var, b: Var) -> Result<Var> {
        let (sa, sb) = (self.shape(a), self.shape(b));
        if sa.len() != 3 || sb.len() != 3 || sa[0] != sb[0] || sa[2] != sb[2] {
            return Err(Error::shape("bmm_nt", sa, sb));
        }
        let (g, m, k, n) = (sa[0], sa[1], sa[2], sb[1]);
        let mut out = vec![T::ZERO; g * m * n];
        let (av, bv) = (&self.value(a).data, &self.value(b).data);
        for i in 0..g {
            gemm(
                m,
                k,
                n,
                &av[i * m * k..(i + 1) * m * k],
                false,
                &bv[i * n * k..(i + 1) * n * k],
                true,
                &mut out[i * m * n..(i + 1) * m * n],
                false,
            );
        }
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor::new(vec![g, m, n], out)?, Op::BatchMatMulNt(a, b), ng))
    }

    /// `[g, m, k] × [g, k, n] → [g, m, n]`.
    pub fn bmm(&mut self, a: Var, b: Var) -> Result<Var> {
        let (sa, sb) = (self.shape(a), self.shape(b));
        if sa.len() != 3 || sb.len() != 3 || sa[0] != sb[0] || sa[2] != sb[1] {
            return Err(Error::shape("bmm", sa, sb));
        }
        let (g, m, k, n) = (sa[0], sa[1], sa[2], sb[2]);
        let mut out = vec![T::ZERO; g * m * n];
        let (av, bv) = (&self.value(a).data, &self.value(b).data);
        for i in 0..g {
            gemm(
                m,
                k,
                n,
                &av[i * m * k..(i + 1) * m * k],
                false,
                &bv[i * k * n..(i + 1) * k * n],
                false,
                &mut out[i * m * n..(i + 1) * m * n],
                false,
            );
        }
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor::new(vec![g, m, n], out)?, Op::BatchMatMul(a, b), ng))
    }

    /// Swaps the last two dimensions.
    pub fn transpose(&mut self, a: Var) -> Result<Var> {
        let s = self.shape(a).to_vec();
        if s.len() < 2 {
            return Err(Error::shape("transpose", &s, &[]));
        }
        let (m, n) = (s[s.len() - 2], s[s.len() - 1]);
        let g = self.value(a).len() / (m * n).max(1);
        let src = &self.value(a).data;
        let mut out = vec![T::ZERO; src.len()];
        for b in 0..g {
            let base = b * m * n;
            for i in 0..m {
                for j in 0..n {
                    out[base + j * m + i] = src[base + i * n + j];
                }
            }
        }
        let mut shape = s.clone();
        let l = shape.len();
        shape.swap(l - 1, l - 2);
        let ng = self.needs(a);
        Ok(self.push(Tensor { shape, data: out }, Op::Transpose(a), ng))
    }

    /// Elementwise sum; `b` may broadcast over the leading dims of `a` when
    /// its shape is a suffix of `a`'s.
    pub fn add(&mut self, a: Var, b: Var) -> Result<Var> {
        let (sa, sb) = (self.shape(a), self.shape(b));
        if sb.len() > sa.len() || sa[sa.len() - sb.len()..] != *sb {
            return Err(Error::shape("add", sa, sb));
        }
        let bv = &self.value(b).data;
        let mut out = self.value(a).data.clone();
        if !bv.is_empty() {
            for chunk in out.chunks_mut(bv.len()) {
                for (o, &x) in chunk.iter_mut().zip(bv) {
                    *o += x;
                }
            }
        }
        let shape = sa.to_vec();
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor { shape, data: out }, Op::Add(a, b), ng))
    }

    fn same_shape(&self, op: &'static str, a: Var, b: Var) -> Result<()> {
        if self.shape(a) != self.shape(b) {
            return Err(Error::shape(op, self.shape(a), self.shape(b)));
        }
        Ok(())
    }

    pub fn sub(&mut self, a: Var, b: Var) -> Result<Var> {
        self.same_shape("sub", a, b)?;
        let data = self.value(a).data.iter().zip(&self.value(b).data).map(|(&x, &y)| x - y).collect();
        let shape = self.shape(a).to_vec();
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor { shape, data }, Op::Sub(a, b), ng))
    }

    pub fn mul(&mut self, a: Var, b: Var) -> Result<Var> {
        self.same_shape("mul", a, b)?;
        let data = self.value(a).data.iter().zip(&self.value(b).data).map(|(&x, &y)| x * y).collect();
        let shape = self.shape(a).to_vec();
        let ng = self.needs(a) || self.needs(b);
        Ok(self.push(Tensor { shape, data }, Op::Mul(a, b), ng))
    }

    pub fn scale(&mut self, a: Var, c: T) -> Var {
        let v = self.value(a);
        let t = Tensor {
            shape: v.shape.clone(),
            data: v.data.iter().map(|&x| x * c).collect(),
        };
        let ng = self.needs(a);
        self.push(t, Op::Scale(a, c), ng)
    }

    pub fn add_scalar(&mut self, a: Var, c: T) -> Var {
        let v = self.value(a);
        let t = Tensor {
            shape: v.shape.clone(),
            data: v.data.iter().map(|&x| x + c).collect(),
        };
        let ng = self.needs(a);
        self.push(t, Op::AddScalar(a), ng)
    }

    /// Sum of all elements as a scalar.
    pub fn sum(&mut self, a: Var) -> Var {
        let s: T = self.value(a).data.iter().copied().sum();
        let ng = self.needs(a);
        self.push(Tensor::scalar(s), Op::Sum(a), ng)
    }

    pub fn sqrt(&mut self, a: Var) -> Var {
        let v = self.value(a);
        let t = Tensor {
            shape: v.shape.clone(),
            data: v.data.iter().map(|&x| x.sqrt()).collect(),
        };
        let ng = self.needs(a);
        self.push(t, Op::Sqrt(a), ng)
    }

    /// Tanh-approximated GELU.
    pub fn gelu(&mut self, a: Var) -> Var {
        let v = self.value(a);
        let t = Tensor {
            shape: v.shape.clone(),
            data: v.data.iter().map(|&x| gelu_parts(x).0).collect(),
        };
        let ng = self.needs(a);
        self.push(t, Op::Gelu(a), ng)
    }

    /// Softmax over the last dimension (max-subtracted).
    pub fn softmax(&mut self, a: Var) -> Var {
        let v = self.value(a);
        let d = v.last_dim();
        let mut data = v.data.clone();
        for row in data.chunks_mut(d.max(1)) {
            softmax_in_place(row);
        }
        let t = Tensor {
            shape: v.shape.clone(),
            data,
        };
        let ng = self.needs(a);
        self.push(t, Op::Softmax(a), ng)
    }

    /// Layer normalization over the last dimension with learned scale and
    /// shift.
    pub fn layer_norm(&mut self, x: Var, gamma: Var, beta: Var) -> Result<Var> {
        let d = self.value(x).last_dim();
        if self.shape(gamma) != [d] || self.shape(beta) != [d] {
            return Err(Error::shape("layer_norm", self.shape(x), self.shape(gamma)));
        }
        let eps = T::from_f64(LAYER_NORM_EPS);
        let inv_d = T::from_f64(1.0 / d as f64);
        let (xv, g, b) = (&self.value(x).data, &self.value(gamma).data, &self.value(beta).data);
        let rows = xv.len() / d;
        let mut xhat = vec![T::ZERO; xv.len()];
        let mut rstd = vec![T::ZERO; rows];
        let mut out = vec![T::ZERO; xv.len()];
        for r in 0..rows {
            let row = &xv[r * d..(r + 1) * d];
            let mean = row.iter().copied().sum::<T>() * inv_d;
            let var = row.iter().map(|&v| (v - mean) * (v - mean)).sum::<T>() * inv_d;
            let rs = T::ONE / (var + eps).sqrt();
            rstd[r] = rs;
            for j in 0..d {
                let h = (row[j] - mean) * rs;
                xhat[r * d + j] = h;
                out[r * d + j] = h * g[j] + b[j];
            }
        }
        let shape = self.shape(x).to_vec();
        let ng = self.needs(x) || self.needs(gamma) || self.needs(beta);
        Ok(self.push(
            Tensor { shape, data: out },
            Op::LayerNorm {
                x,
                gamma,
                beta,
                xhat,
                rstd,
            },
            ng,
        ))
    }

    /// Rows of `table` (`[vocab, dim]`) selected by `ids` → `[ids.len(), dim]`.
    pub fn embedding(&mut self, table: Var, ids: &[u32]) -> Result<Var> {
        let s = self.shape(table);
        if s.len() != 2 {
            return Err(Error::shape("embedding", s, &[ids.len()]));
        }
        let (v, d) = (s[0], s[1]);
        if let Some(bad) = ids.iter().find(|&&i| i as usize >= v) {
            return Err(Error::Contract(format!("embedding id {bad} out of range for {v} rows")));
        }
        let tv = &self.value(table).data;
        let mut out = Vec::with_capacity(ids.len() * d);
        for &i in ids {
            out.extend_from_slice(&tv[i as usize * d..(i as usize + 1) * d]);
        }
        let ng = self.needs(table);
        Ok(self.push(
            Tensor::new(vec![ids.len(), d], out)?,
            Op::Embedding {
                table,
                ids: ids.to_vec(),
            },
            ng,
        ))
    }

    /// Mean token cross-entropy of `logits` (`[n, vocab]`) against targets;
    /// `None` targets are ignored.
    pub fn cross_entropy(&mut self, logits: Var, targets: &[Option<u32>]) -> Result<Var> {
        let s = self.shape(logits);
        let v = self.value(logits).last_dim();
        let n = self.value(logits).len() / v.max(1);
        if n != targets.len() {
            return Err(Error::shape("cross_entropy", s, &[targets.len()]));
        }
        if let Some(bad) = targets.iter().flatten().find(|&&t| t as usize >= v) {
            return Err(Error::Contract(format!("target {bad} out of range for {v} classes")));
        }
        let count = targets.iter().filter(|t| t.is_some()).count();
        let lv = &self.value(logits).data;
        let mut probs = lv.clone();
        let mut total = 0.0f64;
        for (r, t) in targets.iter().enumerate() {
            let row = &mut probs[r * v..(r + 1) * v];
            let max = row.iter().copied().fold(row[0], T::max);
            let mut z = T::ZERO;
            for p in row.iter_mut() {
                *p = (*p - max).exp();
                z += *p;
            }
            for p in row.iter_mut() {
                *p = *p / z;
            }
            if let Some(t) = t {
                total += (z.ln() + max - lv[r * v + *t as usize]).to_f64();
            }
        }
        let loss = if count == 0 { 0.0 } else { total / count as f64 };
        let ng = self.needs(logits);
        Ok(self.push(
            Tensor::scalar(T::from_f64(loss)),
            Op::CrossEntropy {
                logits,
                targets: targets.to_vec(),
                probs,
                count,
            },
            ng,
        ))
    }

    /// Concatenates along the first dimension.
    pub fn concat_rows(&mut self, parts: &[Var]) -> Result<Var> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Contract("concat_rows of nothing".into()))?;
        let tail = self.shape(*first).get(1..).unwrap_or(&[]).to_vec();
        let mut rows = 0;
        let mut data = Vec::new();
        for &p in parts {
            let s = self.shape(p);
            if s.is_empty() || s[1..] != tail[..] {
                return Err(Error::shape("concat_rows", self.shape(*first), s));
            }
            rows += s[0];
            data.extend_from_slice(&self.value(p).data);
        }
        let mut shape = vec![rows];
        shape.extend(tail);
        let ng = parts.iter().any(|&p| self.needs(p));
        Ok(self.push(Tensor { shape, data }, Op::ConcatRows(parts.to_vec()), ng))
    }

    /// Replaces elements where `mask` is true by `value`; `mask` covers the
    /// trailing dims of `x` and repeats over the leading ones.
    pub fn masked_fill(&mut self, x: Var, mask: Rc<[bool]>, value: T) -> Result<Var> {
        let xv = self.value(x);
        if mask.is_empty() || !xv.len().is_multiple_of(mask.len()) {
            return Err(Error::shape("masked_fill", &xv.shape, &[mask.len()]));
        }
        let mut data = xv.data.clone();
        for chunk in data.chunks_mut(mask.len()) {
            for (d, &m) in chunk.iter_mut().zip(mask.iter()) {
                if m {
                    *d = value;
                }
            }
        }
        let shape = xv.shape.clone();
        let ng = self.needs(x);
        Ok(self.push(Tensor { shape, data }, Op::MaskedFill { x, mask }, ng))
    }

    /// Inverted dropout; identity when `p == 0`.
    pub fn dropout(&mut self, x: Var, p: f64, rng: &mut impl Rng) -> Var {
        if p <= 0.0 {
            return x;
        }
        let scale = T::from_f64(1.0 / (1.0 - p));
        let xv = self.value(x);
        let keep: Vec<T> = (0..xv.len())
            .map(|_| if rng.gen::<f64>() < p { T::ZERO } else { scale })
            .collect();
        let data = xv.data.iter().zip(&keep).map(|(&a, &k)| a * k).collect();
        let shape = xv.shape.clone();
        let ng = self.needs(x);
        self.push(Tensor { shape, data }, Op::Dropout { x, keep }, ng)
    }

    /// `[batch·seq, heads·d] → [batch·heads, seq, d]`.
    pub fn split_heads(&mut self, x: Var, batch: usize, seq: usize, heads: usize) -> Result<Var> {
        let s = self.shape(x).to_vec();
        if s.len() != 2 || s[0] != batch * seq || heads == 0 || !s[1].is_multiple_of(heads) {
            return Err(Error::shape("split_heads", &s, &[batch, seq, heads]));
        }
        let d = s[1] / heads;
        let src = &self.value(x).data;
        let mut out = vec![T::ZERO; src.len()];
        for b in 0..batch {
            for t in 0..seq {
                for h in 0..heads {
                    let from = (b * seq + t) * s[1] + h * d;
                    let to = ((b * heads + h) * seq + t) * d;
                    out[to..to + d].copy_from_slice(&src[from..from + d]);
                }
            }
        }
        let ng = self.needs(x);
        Ok(self.push(
            Tensor::new(vec![batch * heads, seq, d], out)?,
            Op::SplitHeads { x, batch, seq, heads },
            ng,
        ))
    }

    /// Inverse of [`Graph::split_heads`].
    pub fn merge_heads(&mut self, x: Var, batch: usize, seq: usize, heads: usize) -> Result<Var> {
        let s = self.shape(x).to_vec();
        if s.len() != 3 || s[0] != batch * heads || s[1] != seq {
            return Err(Error::shape("merge_heads", &s, &[batch, seq, heads]));
        }
        let d = s[2];
        let e = heads * d;
        let src = &self.value(x).data;
        let mut out = vec![T::ZERO; src.len()];
        for b in 0..batch {
            for t in 0..seq {
                for h in 0..heads {
                    let from = ((b * heads + h) * seq + t) * d;
                    let to = (b * seq + t) * e + h * d;
                    out[to..to + d].copy_from_slice(&src[from..from + d]);
                }
            }
        }
        let ng = self.needs(x);
        Ok(self.push(
            Tensor::new(vec![batch * seq, e], out)?,
            Op::MergeHeads { x, batch, seq, heads },
            ng,
        ))
    }

    fn grad_slot(&mut self, v: Var) -> Option<&mut Vec<T>> {
        slot(&mut self.grads, &self.nodes, v)
    }

    fn accumulate(&mut self, v: Var, g: &[T]) {
        if let Some(slot) = self.grad_slot(v) {
            for (s, &x) in slot.iter_mut().zip(g) {
                *s += x;
            }
        }
    }

    /// Reverse pass from a scalar `loss`; gradients accumulate (`+=`)
    /// across every path to a node.
    pub fn backward(&mut self, loss: Var) -> Result<()> {
        if self.value(loss).len() != 1 {
            return Err(Error::Contract(format!(
                "backward needs a scalar loss, got shape {:?}",
                self.shape(loss)
            )));
        }
        self.grads = (0..self.nodes.len()).map(|_| None).collect();
        self.grads[loss.0] = Some(vec![T::ONE]);
        for i in (0..=loss.0).rev() {
            let Some(g) = self.grads[i].take() else { continue };
            if self.nodes[i].needs_grad {
                self.backprop_node(i, &g);
            }
            self.grads[i] = Some(g);
        }
        Ok(())
    }

    fn backprop_node(&mut self, i: usize, g: &[T]) {
        // Ops borrow their saved state from the node while writing into
        // other nodes' gradient buffers, so take the op out temporarily.
        let op = std::mem::replace(&mut self.nodes[i].op, Op::Leaf);
        match &op {
            Op::Leaf => {}
            Op::MatMul(a, b) => {
                let k = self.shape(*b)[0];
                let n = self.shape(*b)[1];
                let m = self.value(*a).len() / k.max(1);
                let (av, bv) = (&self.nodes[a.0].value.data, &self.nodes[b.0].value.data);
                if let Some(s) = slot(&mut self.grads, &self.nodes, *a) {
                    gemm(m, n, k, g, false, bv, true, s, true);
                }
                if let Some(s) = slot(&mut self.grads, &self.nodes, *b) {
                    gemm(k, m, n, av, true, g, false, s, true);
                }
            }
            Op::MatMulNt(a, b) => {
                let (n, k) = (self.shape(*b)[0], self.shape(*b)[1]);
                let m = self.value(*a).len() / k.max(1);
                let (av, bv) = (&self.nodes[a.0].value.data, &self.nodes[b.0].value.data);
                if let Some(s) = slot(&mut self.grads, &self.nodes, *a) {
                    gemm(m, n, k, g, false, bv, false, s, true);
                }
                if let Some(s) = slot(&mut self.grads, &self.nodes, *b) {
                    gemm(n, m, k, g, true, av, false, s, true);
                }
            }
            Op::BatchMatMulNt(a, b) => {
                let (sa, sb) = (self.shape(*a).to_vec(), self.shape(*b).to_vec());
                let (bs, m, k, n) = (sa[0], sa[1], sa[2], sb[1]);
                let (av, bv) = (&self.nodes[a.0].value.data, &self.nodes[b.0].value.data);
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *a) {
                    for x in 0..bs {
                        gemm(
                            m,
                            n,
                            k,
                            &g[x * m * n..(x + 1) * m * n],
                            false,
                            &bv[x * n * k..(x + 1) * n * k],
                            false,
                            &mut slot[x * m * k..(x + 1) * m * k],
                            true,
                        );
                    }
                }
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *b) {
                    for x in 0..bs {
                        gemm(
                            n,
                            m,
                            k,
                            &g[x * m * n..(x + 1) * m * n],
                            true,
                            &av[x * m * k..(x + 1) * m * k],
                            false,
                            &mut slot[x * n * k..(x + 1) * n * k],
                            true,
                        );
                    }
                }
            }
            Op::BatchMatMul(a, b) => {
                let (sa, sb) = (self.shape(*a).to_vec(), self.shape(*b).to_vec());
                let (bs, m, k, n) = (sa[0], sa[1], sa[2], sb[2]);
                let (av, bv) = (&self.nodes[a.0].value.data, &self.nodes[b.0].value.data);
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *a) {
                    for x in 0..bs {
                        gemm(
                            m,
                            n,
                            k,
                            &g[x * m * n..(x + 1) * m * n],
                            false,
                            &bv[x * k * n..(x + 1) * k * n],
                            true,
                            &mut slot[x * m * k..(x + 1) * m * k],
                            true,
                        );
                    }
                }
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *b) {
                    for x in 0..bs {
                        gemm(
                            k,
                            m,
                            n,
                            &av[x * m * k..(x + 1) * m * k],
                            true,
                            &g[x * m * n..(x + 1) * m * n],
                            false,
                            &mut slot[x * k * n..(x + 1) * k * n],
                            true,
                        );
                    }
                }
            }
            Op::Transpose(a) => {
                let s = self.shape(*a).to_vec();
                let (m, n) = (s[s.len() - 2], s[s.len() - 1]);
                if let Some(slot) = self.grad_slot(*a) {
                    let bs = slot.len() / (m * n).max(1);
                    for x in 0..bs {
                        let base = x * m * n;
                        for r in 0..m {
                            for c in 0..n {
                                slot[base + r * n + c] += g[base + c * m + r];
                            }
                        }
                    }
                }
            }
            Op::Add(a, b) => {
                self.accumulate(*a, g);
                if let Some(slot) = self.grad_slot(*b) {
                    let n = slot.len();
                    if n > 0 {
                        for chunk in g.chunks(n) {
                            for (s, &x) in slot.iter_mut().zip(chunk) {
                                *s += x;
                            }
                        }
                    }
                }
            }
            Op::Sub(a, b) => {
                self.accumulate(*a, g);
                if let Some(slot) = self.grad_slot(*b) {
                    for (s, &x) in slot.iter_mut().zip(g) {
                        *s -= x;
                    }
                }
            }
            Op::Mul(a, b) => {
                let (av, bv) = (&self.nodes[a.0].value.data, &self.nodes[b.0].value.data);
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *a) {
                    for ((s, &x), &y) in slot.iter_mut().zip(g).zip(bv) {
                        *s += x * y;
                    }
                }
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *b) {
                    for ((s, &x), &y) in slot.iter_mut().zip(g).zip(av) {
                        *s += x * y;
                    }
                }
            }
            Op::Scale(a, c) => {
                let c = *c;
                if let Some(slot) = self.grad_slot(*a) {
                    for (s, &x) in slot.iter_mut().zip(g) {
                        *s += x * c;
                    }
                }
            }
            Op::AddScalar(a) => self.accumulate(*a, g),
            Op::Sum(a) => {
                let g0 = g[0];
                if let Some(slot) = self.grad_slot(*a) {
                    for s in slot.iter_mut() {
                        *s += g0;
                    }
                }
            }
            Op::Sqrt(a) => {
                let y = &self.nodes[i].value.data;
                let half = T::from_f64(0.5);
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *a) {
                    for ((s, &x), &yv) in slot.iter_mut().zip(g).zip(y) {
                        *s += x * half / yv;
                    }
                }
            }
            Op::Gelu(a) => {
                let xv = &self.nodes[a.0].value.data;
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *a) {
                    for ((s, &x), &v) in slot.iter_mut().zip(g).zip(xv) {
                        *s += x * gelu_parts(v).1;
                    }
                }
            }
            Op::Softmax(a) => {
                let y = &self.nodes[i].value.data;
                let d = self.nodes[i].value.last_dim().max(1);
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *a) {
                    for ((srow, grow), yrow) in slot.chunks_mut(d).zip(g.chunks(d)).zip(y.chunks(d)) {
                        let dot: T = grow.iter().zip(yrow).map(|(&a, &b)| a * b).sum();
                        for ((s, &gy), &yv) in srow.iter_mut().zip(grow).zip(yrow) {
                            *s += yv * (gy - dot);
                        }
                    }
                }
            }
            Op::LayerNorm {
                x,
                gamma,
                beta,
                xhat,
                rstd,
            } => {
                let d = self.nodes[i].value.last_dim();
                let gv = &self.nodes[gamma.0].value.data;
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *gamma) {
                    for (grow, hrow) in g.chunks(d).zip(xhat.chunks(d)) {
                        for j in 0..d {
                            slot[j] += grow[j] * hrow[j];
                        }
                    }
                }
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *beta) {
                    for grow in g.chunks(d) {
                        for j in 0..d {
                            slot[j] += grow[j];
                        }
                    }
                }
                if let Some(slot) = slot(&mut self.grads, &self.nodes, *x) {
                    let inv_d = T::from_f64(1.0 / d as f64);
                    for (r, ((srow, grow), hrow)) in slot.chunks_mut(d).zip(g.chunks(d)).zip(xhat.chunks(d)).enumerate() {
                        let mut mean_dh = T::ZERO;
                        let mut mean_dh_h = T::ZERO;
                        for j in 0..d {
                            let dh = grow[j] * gv[j];
                            mean_dh += dh;
                            mean_dh_h += dh * hrow[j];
                        }
                        mean_dh *= inv_d;
                        mean_dh_h *= inv_d;
                        for j in 0..d {
                            let dh = grow[j] * gv[j];
                            srow[j] += rstd[r] * (dh - mean_dh - hrow[j] * mean_dh_h);
                        }
                    }
                }
            }
            Op::Embedding { table, ids } => {
                let d = self.shape(*table)[1];
                if let Some(slot) = self.grad_slot(*table) {
                    for (r, &id) in ids.iter().enumerate() {
                        let dst = &mut slot[id as usize * d..(id as usize + 1) * d];
                        for (s, &x) in dst.iter_mut().zip(&g[r * d..(r + 1) * d]) {
                            *s += x;
                        }
                    }
                }
            }
            Op::CrossEntropy {
                logits,
                targets,
                probs,
                count,
            } => {
                let v = self.nodes[logits.0].value.last_dim();
                let scale = if *count == 0 { T::ZERO } else { g[0] / T::from_f64(*count as f64) };
                if let Some(slot) = self.grad_slot(*logits) {
                    for (r, t) in targets.iter().enumerate() {
                        let Some(t) = t else { continue };
                        let row = &mut slot[r * v..(r + 1) * v];
                        for (s, &p) in row.iter_mut().zip(&probs[r * v..(r + 1) * v]) {
                            *s += p * scale;
                        }
                        row[*t as usize] -= scale;
                    }
                }
            }
            Op::ConcatRows(parts) => {
                let mut offset = 0;
                for &p in parts {
                    let n = self.nodes[p.0].value.len();
                    self.accumulate(p, &g[offset..offset + n]);
                    offset += n;
                }
            }
            Op::MaskedFill { x, mask } => {
                if let Some(slot) = self.grad_slot(*x) {
                    for (schunk, gchunk) in slot.chunks_mut(mask.len()).zip(g.chunks(mask.len())) {
                        for ((s, &gv), &m) in schunk.iter_mut().zip(gchunk).zip(mask.iter()) {
                            if !m {
                                *s += gv;
                            }
                        }
                    }
                }
            }
            Op::Dropout { x, keep } => {
                if let Some(slot) = self.grad_slot(*x) {
                    for ((s, &gv), &k) in slot.iter_mut().zip(g).zip(keep) {
                        *s += gv * k;
                    }
                }
            }
            Op::SplitHeads { x, batch, seq, heads } => {
                let e = self.shape(*x)[1];
                let d = e / heads;
                if let Some(slot) = self.grad_slot(*x) {
                    for b in 0..*batch {
                        for t in 0..*seq {
                            for h in 0..*heads {
                                let to = (b * seq + t) * e + h * d;
                                let from = ((b * heads + h) * seq + t) * d;
                                for j in 0..d {
                                    slot[to + j] += g[from + j];
                                }
                            }
                        }
                    }
                }
            }
            Op::MergeHeads { x, batch, seq, heads } => {
                let d = self.shape(*x)[2];
                let e = heads * d;
                if let Some(slot) = self.grad_slot(*x) {
                    for b in 0..*batch {
                        for t in 0..*seq {
                            for h in 0..*heads {
                                let to = ((b * heads + h) * seq + t) * d;
                                let from = (b * seq + t) * e + h * d;
                                for j in 0..d {
                                    slot[to + j] += g[from + j];
                                }
                            }
                        }
                    }
                }
            }
        }
        self.nodes[i].op = op;
    }
}

/// Gradient buffer of `v`, allocated on first use; `None` for constants.
fn slot<'a, T: Scalar>(grads: &'a mut [Option<Vec<T>>], nodes: &[Node<T>], v: Var) -> Option<&'a mut Vec<T>> {
    if !nodes[v.0].needs_grad {
        return None;
    }
    let n = nodes[v.0].value.len();
    Some(grads[v.0].get_or_insert_with(|| vec![T::ZERO; n]))
}

/// Numerically stable in-place softmax of one row.
pub fn softmax_in_place<T: Scalar>(row: &mut [T]) {
    if row.is_empty() {
        return;
    }
    let max = row.iter().copied().fold(row[0], T::max);
    let mut z = T::ZERO;
    for v in row.iter_mut() {
        *v = (*v - max).exp();
        z += *v;
    }
    for v in row.iter_mut() {
        *v = *v / z;
    }
}
