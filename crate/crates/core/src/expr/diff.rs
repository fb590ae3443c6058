use super::{BinaryOp, Expr, ExprError, Func};

fn c(v: f64) -> Expr {
    Expr::Const(v)
}

fn mul(a: Expr, b: Expr) -> Expr {
    Expr::binary(BinaryOp::Mul, a, b)
}

fn div(a: Expr, b: Expr) -> Expr {
    Expr::binary(BinaryOp::Div, a, b)
}

fn square(a: Expr) -> Expr {
    Expr::binary(BinaryOp::Pow, a, c(2.0))
}

/// Raw (unsimplified) derivative with respect to `t`.
pub(super) fn differentiate(e: &Expr) -> Result<Expr, ExprError> {
    Ok(match e {
        Expr::Const(_) => c(0.0),
        Expr::Var => c(1.0),
        Expr::Neg(u) => Expr::neg(differentiate(u)?),
        Expr::Sign(_) => {
            return Err(ExprError::Diff {
                reason: "sign (the derivative of abs) has no derivative".into(),
            })
        }
        Expr::Call(f, u) => {
            let du = differentiate(u)?;
            let u = (**u).clone();
            let outer = match f {
                Func::Sin => Expr::call(Func::Cos, u),
                Func::Cos => Expr::neg(Expr::call(Func::Sin, u)),
                Func::Tan => div(c(1.0), square(Expr::call(Func::Cos, u))),
                Func::Exp => Expr::call(Func::Exp, u),
                Func::Ln => div(c(1.0), u),
                Func::Sqrt => div(c(1.0), mul(c(2.0), Expr::call(Func::Sqrt, u))),
                Func::Abs => Expr::Sign(Box::new(u)),
                Func::Atan => div(c(1.0), Expr::binary(BinaryOp::Add, c(1.0), square(u))),
            };
            mul(outer, du)
        }
        Expr::Binary(op, l, r) => {
            let dl = differentiate(l)?;
            let (l, r) = ((**l).clone(), (**r).clone());
            match op {
                BinaryOp::Add | BinaryOp::Sub => Expr::binary(*op, dl, differentiate(&r)?),
                BinaryOp::Mul => {
                    let dr = differentiate(&r)?;
                    Expr::binary(BinaryOp::Add, mul(dl, r), mul(l, dr))
                }
                BinaryOp::Div => {
                    let dr = differentiate(&r)?;
                    div(
                        Expr::binary(BinaryOp::Sub, mul(dl, r.clone()), mul(l, dr)),
                        square(r),
                    )
                }
                BinaryOp::Pow => {
                    if r.depends_on_t() {
                        return Err(ExprError::Diff {
                            reason: format!("exponent of {} depends on t", Expr::binary(*op, l, r)),
                        });
                    }
                    let lowered = Expr::binary(
                        BinaryOp::Pow,
                        l,
                        Expr::binary(BinaryOp::Sub, r.clone(), c(1.0)),
                    );
                    mul(mul(r, lowered), dl)
                }
            }
        }
    })
}
