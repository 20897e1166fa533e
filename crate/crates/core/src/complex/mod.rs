//! Complex modules `Λ²₀ℂ²ⁿ`, `⊙²₀ℂⁿ` and `Λ⁴ℂ⁸` with their highest vectors,
//! and the bridge between complex and real representations.

mod obstruction;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::curvature::realify;
use crate::error::{Error, Result};
use crate::exact::{kernel_of_rows, Basis, CScalar, Field, Matrix, Strategy};
use crate::reps::{for_each_subset, sort_sign, FieldMarker, LieRep};

pub use obstruction::{
    as_pmap, cyclic_value, highest_vector, obstruction_value, run_obstruction, test_triple, weights, HighestVector,
    ObstructionReport,
};

/// The modules whose highest vectors are tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexCase {
    /// `sp(2n, ℂ)` on `Λ²₀ℂ²ⁿ`.
    Sp(usize),
    /// `so(2m, ℂ)` on `⊙²₀ℂ²ᵐ`.
    SoEven(usize),
    /// `so(2m+1, ℂ)` on `⊙²₀ℂ²ᵐ⁺¹`.
    SoOdd(usize),
    /// `sl(8, ℂ)` on `Λ⁴ℂ⁸`.
    Sl8,
}

impl ComplexCase {
    pub fn validate(self) -> Result<Self> {
        match self {
            ComplexCase::Sp(n) if n < 3 => Err(Error::InvalidParameter(format!("sp:{n} needs n >= 3"))),
            ComplexCase::SoEven(m) | ComplexCase::SoOdd(m) if m < 2 => {
                Err(Error::InvalidParameter(format!("{self} needs m >= 2")))
            }
            _ => Ok(self),
        }
    }

    /// Dimension of the standard module `ℂᴺ`.
    pub fn std_dim(self) -> usize {
        match self {
            ComplexCase::Sp(n) => 2 * n,
            ComplexCase::SoEven(m) => 2 * m,
            ComplexCase::SoOdd(m) => 2 * m + 1,
            ComplexCase::Sl8 => 8,
        }
    }

    /// Half the number of `e±ᵢ` labels; `None` for `sl8`.
    fn half(self) -> Option<usize> {
        match self {
            ComplexCase::Sp(n) => Some(n),
            ComplexCase::SoEven(m) | ComplexCase::SoOdd(m) => Some(m),
            ComplexCase::Sl8 => None,
        }
    }

    fn power(self) -> Power {
        match self {
            ComplexCase::Sp(_) => Power::Wedge(2),
            ComplexCase::SoEven(_) | ComplexCase::SoOdd(_) => Power::Sym2,
            ComplexCase::Sl8 => Power::Wedge(4),
        }
    }
}

impl fmt::Display for ComplexCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexCase::Sp(n) => write!(f, "sp:{n}"),
            ComplexCase::SoEven(m) => write!(f, "so-even:{m}"),
            ComplexCase::SoOdd(m) => write!(f, "so-odd:{m}"),
            ComplexCase::Sl8 => write!(f, "sl8"),
        }
    }
}

impl Serialize for ComplexCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `sp:3`, `sp,3`, `so-even:3`, `so-odd:3`, `sl8`, optionally
/// prefixed by `obstruction:`.
impl FromStr for ComplexCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix("obstruction:").unwrap_or(t);
        let (name, arg) = match t.split_once([':', ',']) {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (t, None),
        };
        let num = |arg: Option<&str>| -> Result<usize> {
            let a = arg.ok_or_else(|| Error::Parse(format!("case '{name}' needs a parameter")))?;
            a.parse().map_err(|_| Error::Parse(format!("bad parameter '{a}' in case '{s}'")))
        };
        let case = match name {
            "sp" => ComplexCase::Sp(num(arg)?),
            "so-even" => ComplexCase::SoEven(num(arg)?),
            "so-odd" => ComplexCase::SoOdd(num(arg)?),
            "sl8" if arg.is_none() => ComplexCase::Sl8,
            "sl8" => return Err(Error::Parse(format!("case 'sl8' takes no parameter, got '{}'", arg.unwrap_or("")))),
            other => return Err(Error::Parse(format!("unknown case '{other}'"))),
        };
        case.validate()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Power {
    Wedge(usize),
    Sym2,
}

fn c_int(v: i64) -> CScalar {
    CScalar::from_int(v)
}

/// `E_{a,b}` with 1-based indices.
pub fn elementary(size: usize, a: usize, b: usize) -> Matrix<CScalar> {
    let mut m = Matrix::zeros(size, size);
    m[(a - 1, b - 1)] = CScalar::ONE;
    m
}

/// `{A : AᵀB + BA = 0}` inside `gl(N, ℂ)`.
pub fn metric_skew_algebra(form: &Matrix<CScalar>) -> Vec<Matrix<CScalar>> {
    let n = form.rows();
    let rows = (0..n).flat_map(move |r| {
        (0..n).map(move |c| {
            // (AᵀB + BA)[r][c] = Σ_k A[k][r] B[k][c] + B[r][k] A[k][c]
            let mut row = vec![CScalar::ZERO; n * n];
            for k in 0..n {
                row[k * n + r] = &row[k * n + r] + &form[(k, c)];
                row[k * n + c] = &row[k * n + c] + &form[(r, k)];
            }
            row
        })
    });
    kernel_of_rows(n * n, rows, Strategy::Incremental)
        .into_vectors()
        .into_iter()
        .map(|v| Matrix::from_vec(n, n, v))
        .collect()
}

/// `sl(N, ℂ)`: off-diagonal units then `E_{kk} − E_{k+1,k+1}`.
pub fn sl_algebra(n: usize) -> Vec<Matrix<CScalar>> {
    let mut out = Vec::with_capacity(n * n - 1);
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                out.push(elementary(n, a, b));
            }
        }
    }
    for k in 1..n {
        out.push(elementary(n, k, k).minus(&elementary(n, k + 1, k + 1)));
    }
    out
}

/// `ω(eᵢ, e₋ᵢ) = 1` on `ℂ²ⁿ` in the order `e₁..eₙ, e₋₁..e₋ₙ`.
pub fn symplectic_form(n: usize) -> Matrix<CScalar> {
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if c == r + n {
            CScalar::ONE
        } else if r == c + n {
            c_int(-1)
        } else {
            CScalar::ZERO
        }
    })
}

/// `g(eᵢ, e₋ᵢ) = 1`, plus `g(e₀, e₀) = 1` last when `odd`.
pub fn orthogonal_form(m: usize, odd: bool) -> Matrix<CScalar> {
    let size = 2 * m + usize::from(odd);
    Matrix::from_fn(size, size, |r, c| {
        if (r < 2 * m && c < 2 * m && (c == r + m || r == c + m)) || (odd && r == 2 * m && c == 2 * m) {
            CScalar::ONE
        } else {
            CScalar::ZERO
        }
    })
}

/// `sp(2n, ℂ)` on `ℂ²ⁿ` with `ω`.
pub fn sp_standard(n: usize) -> Result<LieRep<CScalar>> {
    let form = symplectic_form(n);
    LieRep::new(format!("sp({},C)", 2 * n), form.clone(), metric_skew_algebra(&form), FieldMarker::Complex)
}

/// A real representation viewed over `ℂ`.
pub fn complexify(rep: &LieRep) -> Result<LieRep<CScalar>> {
    let lift = |m: &Matrix| m.map(|x| CScalar::real(x.clone()));
    LieRep::new(
        format!("{}^C", rep.label()),
        lift(rep.gram()),
        rep.basis().iter().map(lift).collect(),
        FieldMarker::Complex,
    )
}

/// The underlying real representation: basis `realify(Bₐ), realify(iBₐ)`
/// on `ℝ²ᴺ = ℝᴺ ⊕ iℝᴺ` with the real part of the form,
/// `[[Re G, −Im G], [−Im G, −Re G]]`.
pub fn realify_rep(rep: &LieRep<CScalar>) -> Result<LieRep> {
    let g = rep.gram();
    let k = g.rows();
    let gram = Matrix::from_fn(2 * k, 2 * k, |r, c| {
        let z = &g[(r % k, c % k)];
        match (r < k, c < k) {
            (true, true) => z.re.clone(),
            (false, false) => -&z.re,
            _ => -&z.im,
        }
    });
    let basis =
        rep.basis().iter().map(realify).chain(rep.basis().iter().map(|b| realify(&b.scale(&CScalar::I)))).collect();
    LieRep::new(format!("{}_R", rep.label()), gram, basis, FieldMarker::Real)
}

/// A complex representation `h ⊂ gl(ℂᴺ)` acting on a tensor module `V`.
#[derive(Debug)]
pub struct ComplexRep {
    case: ComplexCase,
    std_form: Option<Matrix<CScalar>>,
    std_algebra: Vec<Matrix<CScalar>>,
    std_coords: Basis<CScalar>,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    v_coords: Basis<CScalar>,
    module: LieRep<CScalar>,
}

pub fn build_complex(case: ComplexCase) -> Result<ComplexRep> {
    let case = case.validate()?;
    let size = case.std_dim();
    let (std_form, std_algebra) = match case {
        ComplexCase::Sp(n) => {
            let f = symplectic_form(n);
            let h = metric_skew_algebra(&f);
            (Some(f), h)
        }
        ComplexCase::SoEven(m) | ComplexCase::SoOdd(m) => {
            let f = orthogonal_form(m, matches!(case, ComplexCase::SoOdd(_)));
            let h = metric_skew_algebra(&f);
            (Some(f), h)
        }
        ComplexCase::Sl8 => (None, sl_algebra(8)),
    };
    let std_coords = Basis::new(std_algebra.iter().map(|m| m.data().to_vec()).collect())?;

    let power = case.power();
    let mut tuples = Vec::new();
    match power {
        Power::Wedge(k) => for_each_subset(size, k, &mut |t| tuples.push(t.to_vec())),
        Power::Sym2 => {
            for p in 0..size {
                for q in p..size {
                    tuples.push(vec![p, q]);
                }
            }
        }
    }
    let index: HashMap<Vec<usize>, usize> = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let full_dim = tuples.len();

    let mut rep = ComplexRep {
        case,
        std_form,
        std_algebra,
        std_coords,
        tuples,
        index,
        v_coords: Basis::new(Vec::new())?,
        module: LieRep::new("", Matrix::zeros(0, 0), Vec::new(), FieldMarker::Complex)?,
    };

    // V: the kernel of the invariant trace functional, or everything.
    let v_basis: Vec<Vec<CScalar>> = match (&rep.std_form, power) {
        (Some(f), Power::Wedge(2) | Power::Sym2) => {
            let trace: Vec<CScalar> = rep.tuples.iter().map(|t| f[(t[0], t[1])].clone()).collect();
            kernel_of_rows(full_dim, std::iter::once(trace), Strategy::Incremental).into_vectors()
        }
        _ => (0..full_dim).map(|i| crate::exact::unit(full_dim, i)).collect(),
    };
    let full_gram = rep.full_gram();
    let vmat = Matrix::from_cols(full_dim, &v_basis);
    let gram = vmat.transpose().mul(&full_gram).mul(&vmat);
    rep.v_coords = Basis::new(v_basis)?;
    let basis = rep.std_algebra.iter().map(|a| rep.restricted_action(a)).collect::<Result<Vec<_>>>()?;
    let label = match case {
        ComplexCase::Sp(n) => format!("sp({},C) on L2_0", 2 * n),
        ComplexCase::SoEven(m) => format!("so({},C) on S2_0", 2 * m),
        ComplexCase::SoOdd(m) => format!("so({},C) on S2_0", 2 * m + 1),
        ComplexCase::Sl8 => "sl(8,C) on L4".to_string(),
    };
    rep.module = LieRep::new(label, gram, basis, FieldMarker::Complex)?;
    Ok(rep)
}

impl ComplexRep {
    pub fn case(&self) -> ComplexCase {
        self.case
    }

    pub fn module(&self) -> &LieRep<CScalar> {
        &self.module
    }

    pub fn dim_v(&self) -> usize {
        self.module.n()
    }

    pub fn dim_h(&self) -> usize {
        self.module.dim()
    }

    /// `h` in its standard representation on `ℂᴺ`.
    pub fn std_algebra(&self) -> &[Matrix<CScalar>] {
        &self.std_algebra
    }

    pub fn std_form(&self) -> Option<&Matrix<CScalar>> {
        self.std_form.as_ref()
    }

    /// Coordinates of `A ∈ gl(ℂᴺ)` in the basis of `h`.
    pub fn h_coords(&self, a: &Matrix<CScalar>) -> Option<Vec<CScalar>> {
        self.std_coords.coords(a.data())
    }

    /// 0-based position of `e1`, `e-1`, `e0`, ...
    pub fn label_index(&self, label: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("unknown basis vector '{label}' for {}", self.case));
        let body = label.trim().strip_prefix('e').ok_or_else(bad)?;
        let k: i64 = body.parse().map_err(|_| bad())?;
        let pos = match self.case.half() {
            None if (1..=8).contains(&k) => k as usize - 1,
            Some(h) if k >= 1 && k as usize <= h => k as usize - 1,
            Some(h) if k <= -1 && (-k) as usize <= h => h + (-k) as usize - 1,
            Some(_) if k == 0 && matches!(self.case, ComplexCase::SoOdd(_)) => self.case.std_dim() - 1,
            _ => return Err(bad()),
        };
        Ok(pos)
    }

    /// `e_{i₁}∧…` or `e_p⊙e_q` in full-module coordinates; `None` if it vanishes.
    fn product_index(&self, idx: &[usize]) -> Option<(usize, i64)> {
        let mut key = idx.to_vec();
        match self.case.power() {
            Power::Sym2 => {
                key.sort_unstable();
                Some((self.index[&key], 1))
            }
            Power::Wedge(_) => {
                let s = sort_sign(&mut key);
                (s != 0).then(|| (self.index[&key], s))
            }
        }
    }

    /// The product of labelled basis vectors as coordinates on `V`.
    pub fn vector(&self, labels: &[&str]) -> Result<Vec<CScalar>> {
        let k = match self.case.power() {
            Power::Wedge(k) => k,
            Power::Sym2 => 2,
        };
        if labels.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: labels.len() });
        }
        let idx = labels.iter().map(|l| self.label_index(l)).collect::<Result<Vec<_>>>()?;
        let mut full = vec![CScalar::ZERO; self.tuples.len()];
        if let Some((i, s)) = self.product_index(&idx) {
            full[i] = c_int(s);
        }
        self.v_coords.coords(&full).ok_or(Error::NotContained)
    }

    /// Coordinates on `V` of a full-module vector given by index tuples.
    pub(crate) fn product_coords(&self, idx: &[usize]) -> Option<Vec<CScalar>> {
        let mut full = vec![CScalar::ZERO; self.tuples.len()];
        let (i, s) = self.product_index(idx)?;
        full[i] = c_int(s);
        self.v_coords.coords(&full)
    }

    fn full_gram(&self) -> Matrix<CScalar> {
        let d = self.tuples.len();
        let t = &self.tuples;
        match (&self.std_form, self.case.power()) {
            (Some(w), Power::Wedge(2)) => Matrix::from_fn(d, d, |a, b| {
                let (p, q, r, s) = (t[a][0], t[a][1], t[b][0], t[b][1]);
                &(&w[(p, r)] * &w[(q, s)]) - &(&w[(p, s)] * &w[(q, r)])
            }),
            (Some(g), Power::Sym2) => Matrix::from_fn(d, d, |a, b| {
                let (p, q, r, s) = (t[a][0], t[a][1], t[b][0], t[b][1]);
                &(&g[(p, r)] * &g[(q, s)]) + &(&g[(p, s)] * &g[(q, r)])
            }),
            _ => Matrix::from_fn(d, d, |a, b| {
                let mut cat: Vec<usize> = t[a].iter().chain(&t[b]).copied().collect();
                c_int(sort_sign(&mut cat))
            }),
        }
    }

    /// Induced action of `A ∈ gl(ℂᴺ)` on the full tensor module.
    fn full_action(&self, a: &Matrix<CScalar>) -> Matrix<CScalar> {
        let d = self.tuples.len();
        let size = self.case.std_dim();
        let mut out = Matrix::zeros(d, d);
        for (c, t) in self.tuples.iter().enumerate() {
            for s in 0..t.len() {
                for r in 0..size {
                    let x = &a[(r, t[s])];
                    if x.is_zero() {
                        continue;
                    }
                    let mut probe = t.clone();
                    probe[s] = r;
                    if let Some((i, sign)) = self.product_index(&probe) {
                        let v = &out[(i, c)] + &(x * &c_int(sign));
                        out[(i, c)] = v;
                    }
                }
            }
        }
        out
    }

    /// Induced action of `A` on `V`, in `V`-coordinates.
    pub fn restricted_action(&self, a: &Matrix<CScalar>) -> Result<Matrix<CScalar>> {
        let full = self.full_action(a);
        let cols = self
            .v_coords
            .vectors()
            .iter()
            .map(|v| self.v_coords.coords(&full.mul_vec(v)).ok_or(Error::NotContained))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(cols.len(), &cols))
    }

    /// Diagonal Cartan elements: `E_{ii} − E_{−i,−i}`, or `E_{kk} − E_{k+1,k+1}` for `sl8`.
    pub fn cartan(&self) -> Vec<Matrix<CScalar>> {
        let size = self.case.std_dim();
        match self.case.half() {
            Some(h) => (1..=h).map(|i| elementary(size, i, i).minus(&elementary(size, h + i, h + i))).collect(),
            None => (1..size).map(|k| elementary(size, k, k).minus(&elementary(size, k + 1, k + 1))).collect(),
        }
    }
}
