//! Expression trees for the scalar functions of an MPEC instance.
//!
//! Evaluation is exact over rationals; only `exp` nodes force floating
//! arithmetic. Directional derivatives are estimated numerically from a
//! shrinking one-sided difference-quotient sequence, and gradients are
//! computed in closed form whenever no nonsmooth node is active.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ExprError {
    #[error("division by zero while evaluating expression")]
    DivisionByZero,
    #[error("dimension mismatch: expression expects dimension {expected}, point has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid expression: {0}")]
    Invalid(String),
}

/// A scalar value: exact rational unless floating arithmetic was forced.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Rat(Rational),
    F64(f64),
}

impl Value {
    pub fn zero() -> Self {
        Value::Rat(Rational::zero())
    }

    pub fn is_float(&self) -> bool {
        matches!(self, Value::F64(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::F64(x) => *x,
        }
    }

    /// Exact rational form. Every finite f64 is a rational, so this is lossless.
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Value::Rat(r) => Some(r.clone()),
            Value::F64(x) => Rational::from_float(*x),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Rat(r) => r.is_zero(),
            Value::F64(x) => *x == 0.0,
        }
    }

    /// Sign test with a tolerance applied only on the floating path.
    pub fn sign_with_tol(&self, tol: f64) -> std::cmp::Ordering {
        match self {
            Value::Rat(r) => r.cmp(&Rational::zero()),
            Value::F64(x) => {
                if *x > tol {
                    std::cmp::Ordering::Greater
                } else if *x < -tol {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            }
        }
    }

    fn binop(
        a: &Value,
        b: &Value,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        flt: impl Fn(f64, f64) -> f64,
    ) -> Value {
        match (a, b) {
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(rat(x, y)),
            _ => Value::F64(flt(a.to_f64(), b.to_f64())),
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        Value::binop(self, other, |a, b| a + b, |a, b| a + b)
    }

    pub fn mul(&self, other: &Value) -> Value {
        Value::binop(self, other, |a, b| a * b, |a, b| a * b)
    }

    pub fn sub(&self, other: &Value) -> Value {
        Value::binop(self, other, |a, b| a - b, |a, b| a - b)
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Rat(r) => Value::Rat(-r.clone()),
            Value::F64(x) => Value::F64(-x),
        }
    }

    pub fn abs(&self) -> Value {
        match self {
            Value::Rat(r) => Value::Rat(r.abs()),
            Value::F64(x) => Value::F64(x.abs()),
        }
    }

    pub fn div(&self, other: &Value) -> Result<Value, ExprError> {
        if other.is_zero() {
            return Err(ExprError::DivisionByZero);
        }
        Ok(Value::binop(self, other, |a, b| a / b, |a, b| a / b))
    }

    pub fn powi(&self, n: u32) -> Value {
        match self {
            Value::Rat(r) => Value::Rat(num_traits::pow::pow(r.clone(), n as usize)),
            Value::F64(x) => Value::F64(x.powi(n as i32)),
        }
    }

    pub fn exp(&self) -> Value {
        Value::F64(self.to_f64().exp())
    }

    /// Total order used for max/min; mixed kinds compare through f64.
    pub fn compare(&self, other: &Value) -> std::cmp::Ordering {
        match (self, other) {
            (Value::Rat(a), Value::Rat(b)) => a.cmp(b),
            _ => self
                .to_f64()
                .partial_cmp(&other.to_f64())
                .unwrap_or(std::cmp::Ordering::Equal),
        }
    }
}

/// A point (or direction) in R^n.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<Value>);

impl Point {
    pub fn from_rationals(coords: Vec<Rational>) -> Self {
        Point(coords.into_iter().map(Value::Rat).collect())
    }

    pub fn from_f64s(coords: &[f64]) -> Self {
        Point(coords.iter().map(|&x| Value::F64(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![Value::zero(); dim])
    }

    /// self + h * d, coordinatewise.
    pub fn step(&self, h: &Rational, d: &Point) -> Point {
        let hv = Value::Rat(h.clone());
        Point(
            self.0
                .iter()
                .zip(&d.0)
                .map(|(k, di)| k.add(&hv.mul(di)))
                .collect(),
        )
    }

    /// Exact rational coordinates (floats converted losslessly).
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|v| v.to_rational().unwrap_or_else(Rational::zero))
            .collect()
    }
}

/// Expression tree over variables `k_0 .. k_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Rational),
    Var(usize),
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Neg(Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Abs(Box<Expr>),
    Max(Vec<Expr>),
    Min(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Exp(Box<Expr>),
}

impl Expr {
    pub fn constant(n: i64) -> Expr {
        Expr::Const(Rational::from_integer(n.into()))
    }

    /// Structural validity against a declared dimension.
    pub fn validate(&self, dim: usize) -> Result<(), ExprError> {
        match self {
            Expr::Const(_) => Ok(()),
            Expr::Var(i) => {
                if *i < dim {
                    Ok(())
                } else {
                    Err(ExprError::Invalid(format!(
                        "variable index {i} out of range for dimension {dim}"
                    )))
                }
            }
            Expr::Add(cs) | Expr::Mul(cs) | Expr::Max(cs) | Expr::Min(cs) => {
                if cs.len() < 2 {
                    return Err(ExprError::Invalid(
                        "add/mul/max/min need at least 2 children".into(),
                    ));
                }
                cs.iter().try_for_each(|c| c.validate(dim))
            }
            Expr::Neg(c) | Expr::Abs(c) | Expr::Exp(c) => c.validate(dim),
            Expr::Div(num, den) => {
                if matches!(den.as_ref(), Expr::Const(c) if c.is_zero()) {
                    return Err(ExprError::Invalid("division by constant zero".into()));
                }
                num.validate(dim)?;
                den.validate(dim)
            }
            Expr::Pow(c, e) => {
                if *e < 1 {
                    return Err(ExprError::Invalid("pow exponent must be >= 1".into()));
                }
                c.validate(dim)
            }
        }
    }
}

/// Evaluate at a point. Exact whenever the tree has no `exp` node and the
/// point is rational.
pub fn eval(e: &Expr, k: &Point) -> Result<Value, ExprError> {
    match e {
        Expr::Const(c) => Ok(Value::Rat(c.clone())),
        Expr::Var(i) => k
            .0
            .get(*i)
            .cloned()
            .ok_or(ExprError::DimensionMismatch {
                expected: *i + 1,
                got: k.dim(),
            }),
        Expr::Add(cs) => {
            let mut acc = Value::zero();
            for c in cs {
                acc = acc.add(&eval(c, k)?);
            }
            Ok(acc)
        }
        Expr::Mul(cs) => {
            let mut acc = Value::Rat(Rational::one());
            for c in cs {
                acc = acc.mul(&eval(c, k)?);
            }
            Ok(acc)
        }
        Expr::Neg(c) => Ok(eval(c, k)?.neg()),
        Expr::Div(num, den) => eval(num, k)?.div(&eval(den, k)?),
        Expr::Abs(c) => Ok(eval(c, k)?.abs()),
        Expr::Max(cs) => {
            let mut best: Option<Value> = None;
            for c in cs {
                let v = eval(c, k)?;
                best = Some(match best {
                    None => v,
                    Some(b) => {
                        if v.compare(&b) == std::cmp::Ordering::Greater {
                            v
                        } else {
                            b
                        }
                    }
                });
            }
            Ok(best.unwrap())
        }
        Expr::Min(cs) => {
            let mut best: Option<Value> = None;
            for c in cs {
                let v = eval(c, k)?;
                best = Some(match best {
                    None => v,
                    Some(b) => {
                        if v.compare(&b) == std::cmp::Ordering::Less {
                            v
                        } else {
                            b
                        }
                    }
                });
            }
            Ok(best.unwrap())
        }
        Expr::Pow(c, n) => Ok(eval(c, k)?.powi(*n)),
        Expr::Exp(c) => Ok(eval(c, k)?.exp()),
    }
}

/// Configuration of the one-sided difference-quotient limit.
#[derive(Debug, Clone)]
pub struct LimitConfig {
    /// First step; subsequent steps halve.
    pub h0: Rational,
    /// Number of steps in the shrinking sequence.
    pub steps: usize,
    /// Quotient agreement tolerance, relative with absolute floor 1.
    pub rel_tol: f64,
    /// Declared value of the function at the base point, for functions whose
    /// tree is not evaluable there (piecewise definitions).
    pub base_value: Option<Value>,
}

impl Default for LimitConfig {
    fn default() -> Self {
        LimitConfig {
            h0: Rational::new(1.into(), 16.into()),
            steps: 40,
            rel_tol: 1e-8,
            base_value: None,
        }
    }
}

/// Outcome of a directional-derivative estimate.
#[derive(Debug, Clone)]
pub struct DirDerivative {
    pub estimate: f64,
    /// False when the quotient sequence did not stabilize.
    pub converged: bool,
    /// Steps consumed before convergence (or `steps` when divergent).
    pub steps_used: usize,
    /// True when floating arithmetic entered the evaluation.
    pub float_path: bool,
}

const FLOAT_NOISE_FACTOR: f64 = 64.0 * f64::EPSILON;

/// One-sided directional derivative estimate of `e` at `k` along `d`:
/// the limit of (J(k+hd) - J(k))/h over the shrinking step sequence.
///
/// Convergence is declared once three consecutive quotients agree within
/// `rel_tol` relative (floored at 1 absolute); on the floating path the
/// tolerance widens by the roundoff floor of the difference quotient. The
/// returned estimate extrapolates the last accepted pair, which cancels the
/// leading O(h) error term exactly.
pub fn directional_derivative(
    e: &Expr,
    k: &Point,
    d: &Point,
    cfg: &LimitConfig,
) -> Result<DirDerivative, ExprError> {
    if k.dim() != d.dim() {
        return Err(ExprError::DimensionMismatch {
            expected: k.dim(),
            got: d.dim(),
        });
    }
    let base = match &cfg.base_value {
        Some(v) => v.clone(),
        None => eval(e, k)?,
    };
    let mut float_path = base.is_float();
    let mut scale: f64 = base.to_f64().abs().max(1.0);
    let two = Rational::from_integer(2.into());

    // (quotient as f64, exact rational quotient when available)
    let mut quotients: Vec<f64> = Vec::with_capacity(cfg.steps);
    let mut h = cfg.h0.clone();
    for j in 0..cfg.steps {
        let x = k.step(&h, d);
        let v = eval(e, &x)?;
        if v.is_float() {
            float_path = true;
        }
        scale = scale.max(v.to_f64().abs());
        let q = match (&v, &base) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat((a - b) / &h),
            _ => Value::F64((v.to_f64() - base.to_f64()) / h.to_f64().unwrap()),
        };
        quotients.push(q.to_f64());

        if j >= 2 {
            let (q0, q1, q2) = (quotients[j - 2], quotients[j - 1], quotients[j]);
            let noise = if float_path {
                FLOAT_NOISE_FACTOR * scale / h.to_f64().unwrap()
            } else {
                0.0
            };
            let agree = |a: f64, b: f64| {
                (a - b).abs() <= cfg.rel_tol * a.abs().max(b.abs()).max(1.0) + noise
            };
            if agree(q0, q1) && agree(q1, q2) && agree(q0, q2) {
                return Ok(DirDerivative {
                    estimate: 2.0 * q2 - q1,
                    converged: true,
                    steps_used: j + 1,
                    float_path,
                });
            }
        }
        h /= &two;
    }
    Ok(DirDerivative {
        estimate: *quotients.last().unwrap_or(&0.0),
        converged: false,
        steps_used: cfg.steps,
        float_path,
    })
}

/// Closed-form gradient when no abs/max/min node is active-nonsmooth at `k`
/// (abs argument nonzero, max/min attained by a unique child). Returns
/// `None` otherwise.
pub fn gradient_if_smooth(e: &Expr, k: &Point) -> Result<Option<Vec<Value>>, ExprError> {
    Ok(eval_with_gradient(e, k)?.map(|(_, g)| g))
}

/// Recursive value+gradient evaluation; `None` marks an active nonsmooth node.
fn eval_with_gradient(e: &Expr, k: &Point) -> Result<Option<(Value, Vec<Value>)>, ExprError> {
    let n = k.dim();
    let zero_grad = || vec![Value::zero(); n];
    match e {
        Expr::Const(c) => Ok(Some((Value::Rat(c.clone()), zero_grad()))),
        Expr::Var(i) => {
            if *i >= n {
                return Err(ExprError::DimensionMismatch {
                    expected: *i + 1,
                    got: n,
                });
            }
            let mut g = zero_grad();
            g[*i] = Value::Rat(Rational::one());
            Ok(Some((k.0[*i].clone(), g)))
        }
        Expr::Add(cs) => {
            let mut val = Value::zero();
            let mut grad = zero_grad();
            for c in cs {
                match eval_with_gradient(c, k)? {
                    None => return Ok(None),
                    Some((v, g)) => {
                        val = val.add(&v);
                        for (gi, ci) in grad.iter_mut().zip(&g) {
                            *gi = gi.add(ci);
                        }
                    }
                }
            }
            Ok(Some((val, grad)))
        }
        Expr::Mul(cs) => {
            let mut parts = Vec::with_capacity(cs.len());
            for c in cs {
                match eval_with_gradient(c, k)? {
                    None => return Ok(None),
                    Some(p) => parts.push(p),
                }
            }
            let mut val = Value::Rat(Rational::one());
            for (v, _) in &parts {
                val = val.mul(v);
            }
            // product rule: sum_i (prod_{j != i} v_j) * g_i
            let mut grad = zero_grad();
            for i in 0..parts.len() {
                let mut coef = Value::Rat(Rational::one());
                for (j, (v, _)) in parts.iter().enumerate() {
                    if j != i {
                        coef = coef.mul(v);
                    }
                }
                for (gc, gi) in grad.iter_mut().zip(&parts[i].1) {
                    *gc = gc.add(&coef.mul(gi));
                }
            }
            Ok(Some((val, grad)))
        }
        Expr::Neg(c) => Ok(eval_with_gradient(c, k)?
            .map(|(v, g)| (v.neg(), g.iter().map(Value::neg).collect()))),
        Expr::Div(num, den) => {
            let (nv, ng) = match eval_with_gradient(num, k)? {
                None => return Ok(None),
                Some(p) => p,
            };
            let (dv, dg) = match eval_with_gradient(den, k)? {
                None => return Ok(None),
                Some(p) => p,
            };
            if dv.is_zero() {
                return Err(ExprError::DivisionByZero);
            }
            let val = nv.div(&dv)?;
            let dv2 = dv.mul(&dv);
            let grad = ng
                .iter()
                .zip(&dg)
                .map(|(gn, gd)| {
                    gn.mul(&dv).sub(&nv.mul(gd)).div(&dv2)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Some((val, grad)))
        }
        Expr::Abs(c) => {
            let (v, g) = match eval_with_gradient(c, k)? {
                None => return Ok(None),
                Some(p) => p,
            };
            if v.is_zero() {
                return Ok(None); // active kink
            }
            if v.sign_with_tol(0.0) == std::cmp::Ordering::Greater {
                Ok(Some((v, g)))
            } else {
                Ok(Some((v.neg(), g.iter().map(Value::neg).collect())))
            }
        }
        Expr::Max(cs) | Expr::Min(cs) => {
            let want_max = matches!(e, Expr::Max(_));
            let mut parts = Vec::with_capacity(cs.len());
            for c in cs {
                match eval_with_gradient(c, k)? {
                    None => return Ok(None),
                    Some(p) => parts.push(p),
                }
            }
            let mut best = 0usize;
            let mut ties = false;
            for i in 1..parts.len() {
                match parts[i].0.compare(&parts[best].0) {
                    std::cmp::Ordering::Greater if want_max => {
                        best = i;
                        ties = false;
                    }
                    std::cmp::Ordering::Less if !want_max => {
                        best = i;
                        ties = false;
                    }
                    std::cmp::Ordering::Equal => ties = true,
                    _ => {}
                }
            }
            if ties {
                return Ok(None); // argmax/argmin not unique
            }
            let (v, g) = parts.swap_remove(best);
            Ok(Some((v, g)))
        }
        Expr::Pow(c, nth) => {
            let (v, g) = match eval_with_gradient(c, k)? {
                None => return Ok(None),
                Some(p) => p,
            };
            let val = v.powi(*nth);
            let coef = Value::Rat(Rational::from_integer((*nth).into())).mul(&v.powi(*nth - 1));
            let grad = g.iter().map(|gi| coef.mul(gi)).collect();
            Ok(Some((val, grad)))
        }
        Expr::Exp(c) => {
            let (v, g) = match eval_with_gradient(c, k)? {
                None => return Ok(None),
                Some(p) => p,
            };
            let val = v.exp();
            let grad = g.iter().map(|gi| val.mul(gi)).collect();
            Ok(Some((val, grad)))
        }
    }
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, ExprError> {
    let s = s.trim();
    let mk_err = || ExprError::Invalid(format!("malformed rational '{s}'"));
    if let Some((num, den)) = s.split_once('/') {
        let n: num_bigint::BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let d: num_bigint::BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(ExprError::Invalid(format!("zero denominator in '{s}'")));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: num_bigint::BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Rational::from_integer(n))
    }
}

/// Render a rational as "p" or "p/q".
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn pt(coords: &[(i64, i64)]) -> Point {
        Point::from_rationals(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// |k1| + k2^2
    fn example2() -> Expr {
        Expr::Add(vec![
            Expr::Abs(Box::new(Expr::Var(0))),
            Expr::Pow(Box::new(Expr::Var(1)), 2),
        ])
    }

    /// -e^(k1+k2)
    fn example3() -> Expr {
        Expr::Neg(Box::new(Expr::Exp(Box::new(Expr::Add(vec![
            Expr::Var(0),
            Expr::Var(1),
        ])))))
    }

    /// k1^3/k2 + k1 (Example 1's tree, undefined on the axes)
    fn example1() -> Expr {
        Expr::Add(vec![
            Expr::Div(
                Box::new(Expr::Pow(Box::new(Expr::Var(0)), 3)),
                Box::new(Expr::Var(1)),
            ),
            Expr::Var(0),
        ])
    }

    #[test]
    fn eval_abs_plus_square() {
        let v = eval(&example2(), &pt(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(v, Value::Rat(rat(5, 1)));
    }

    #[test]
    fn eval_constant() {
        let v = eval(&Expr::constant(7), &pt(&[(3, 1), (4, 1)])).unwrap();
        assert_eq!(v, Value::Rat(rat(7, 1)));
    }

    #[test]
    fn eval_exp_forces_float() {
        let v = eval(&example3(), &pt(&[(0, 1), (0, 1)])).unwrap();
        assert!(v.is_float());
        assert_eq!(v.to_f64(), -1.0);
    }

    #[test]
    fn eval_division_by_zero() {
        let err = eval(&example1(), &pt(&[(0, 1), (0, 1)])).unwrap_err();
        assert_eq!(err, ExprError::DivisionByZero);
    }

    #[test]
    fn dirderiv_example2_at_origin() {
        let d = directional_derivative(
            &example2(),
            &pt(&[(0, 1), (0, 1)]),
            &pt(&[(1, 1), (0, 1)]),
            &LimitConfig::default(),
        )
        .unwrap();
        assert!(d.converged);
        assert!((d.estimate - 1.0).abs() < 1e-9);
    }

    #[test]
    fn dirderiv_zero_direction() {
        let d = directional_derivative(
            &example2(),
            &pt(&[(1, 2), (1, 3)]),
            &pt(&[(0, 1), (0, 1)]),
            &LimitConfig::default(),
        )
        .unwrap();
        assert!(d.converged);
        assert_eq!(d.estimate, 0.0);
    }

    #[test]
    fn dirderiv_example1_off_axis() {
        // J'(0, d) = d1 for the piecewise function; declared base value 0.
        let cfg = LimitConfig {
            base_value: Some(Value::zero()),
            ..LimitConfig::default()
        };
        let d = directional_derivative(
            &example1(),
            &pt(&[(0, 1), (0, 1)]),
            &pt(&[(2, 1), (3, 1)]),
            &cfg,
        )
        .unwrap();
        assert!(d.converged);
        assert!((d.estimate - 2.0).abs() < 1e-8);
    }

    #[test]
    fn dirderiv_quadratic_direction_converges() {
        // pure normal direction of the kink: quotient = h * d2^2, limit 0
        let d = directional_derivative(
            &example2(),
            &pt(&[(0, 1), (0, 1)]),
            &pt(&[(0, 1), (1, 1)]),
            &LimitConfig::default(),
        )
        .unwrap();
        assert!(d.converged);
        assert!(d.estimate.abs() < 1e-8);
    }

    #[test]
    fn dirderiv_exp_float_path() {
        let d = directional_derivative(
            &example3(),
            &pt(&[(0, 1), (0, 1)]),
            &pt(&[(1, 1), (1, 1)]),
            &LimitConfig::default(),
        )
        .unwrap();
        assert!(d.converged);
        assert!(d.float_path);
        assert!((d.estimate - (-2.0)).abs() < 1e-6);
    }

    #[test]
    fn gradient_of_example3_at_origin() {
        let g = gradient_if_smooth(&example3(), &pt(&[(0, 1), (0, 1)]))
            .unwrap()
            .expect("smooth");
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].to_f64(), -1.0);
        assert_eq!(g[1].to_f64(), -1.0);
    }

    #[test]
    fn gradient_none_at_active_kink() {
        let g = gradient_if_smooth(&example2(), &pt(&[(0, 1), (0, 1)])).unwrap();
        assert!(g.is_none());
    }

    #[test]
    fn gradient_off_kink() {
        let g = gradient_if_smooth(&example2(), &pt(&[(3, 1), (1, 1)]))
            .unwrap()
            .expect("smooth");
        assert_eq!(g[0], Value::Rat(rat(1, 1)));
        assert_eq!(g[1], Value::Rat(rat(2, 1)));
    }

    #[test]
    fn validate_rejects_bad_trees() {
        assert!(Expr::Var(2).validate(2).is_err());
        assert!(Expr::Add(vec![Expr::Var(0)]).validate(2).is_err());
        assert!(Expr::Pow(Box::new(Expr::Var(0)), 0).validate(2).is_err());
        assert!(
            Expr::Div(Box::new(Expr::Var(0)), Box::new(Expr::constant(0)))
                .validate(2)
                .is_err()
        );
    }

    #[test]
    fn rational_parse_roundtrip() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(format_rational(&rat(3, 2)), "3/2");
        assert_eq!(format_rational(&rat(-4, 2)), "-2");
        assert!(parse_rational("1/0").is_err());
    }
}
