use super::{BinaryOp, Expr};

pub(super) fn simplify(e: &Expr) -> Expr {
    let node = match e {
        Expr::Const(_) | Expr::Var => return e.clone(),
        Expr::Neg(u) => match simplify(u) {
            Expr::Neg(inner) => return *inner,
            u => Expr::neg(u),
        },
        Expr::Call(f, u) => Expr::call(*f, simplify(u)),
        Expr::Sign(u) => Expr::Sign(Box::new(simplify(u))),
        Expr::Binary(op, l, r) => {
            let (l, r) = (simplify(l), simplify(r));
            match identity(*op, &l, &r) {
                Some(done) => done,
                None => Expr::binary(*op, l, r),
            }
        }
    };
    fold(node)
}

fn identity(op: BinaryOp, l: &Expr, r: &Expr) -> Option<Expr> {
    let (lc, rc) = (l.as_const(), r.as_const());
    match op {
        BinaryOp::Add if lc == Some(0.0) => Some(r.clone()),
        BinaryOp::Add | BinaryOp::Sub if rc == Some(0.0) => Some(l.clone()),
        BinaryOp::Sub if lc == Some(0.0) => Some(simplify(&Expr::neg(r.clone()))),
        BinaryOp::Mul if lc == Some(0.0) || rc == Some(0.0) => Some(Expr::Const(0.0)),
        BinaryOp::Mul if lc == Some(1.0) => Some(r.clone()),
        BinaryOp::Mul | BinaryOp::Div if rc == Some(1.0) => Some(l.clone()),
        BinaryOp::Pow if rc == Some(1.0) => Some(l.clone()),
        BinaryOp::Pow if rc == Some(0.0) => Some(Expr::Const(1.0)),
        _ => None,
    }
}

// Collapses a t-free node into a constant when its value is finite.
fn fold(e: Expr) -> Expr {
    if matches!(e, Expr::Const(_)) || e.depends_on_t() {
        return e;
    }
    match e.eval(0.0) {
        Ok(v) => Expr::Const(v),
        Err(_) => e,
    }
}
