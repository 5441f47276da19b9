use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteSemiring;

/// Every idempotent semiring on `n ≥ 2` labelled elements with `0` first and
/// `1` last. Each isomorphism class appears at least once.
pub fn all_semirings(n: usize) -> Vec<FiniteSemiring> {
    assert!(n >= 2, "need 0 ≠ 1");
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ => format!("e{i}"),
        })
        .collect();
    let adds = tables(n, |x, y| {
        if x == 0 {
            Some(y)
        } else if y == 0 || x == y {
            Some(x)
        } else {
            None
        }
    })
    .into_iter()
    .filter(|t| associative(n, t))
    .collect::<Vec<_>>();
    let muls = tables(n, |x, y| {
        if x == 0 || y == 0 {
            Some(0)
        } else if x == n - 1 {
            Some(y)
        } else if y == n - 1 {
            Some(x)
        } else {
            None
        }
    })
    .into_iter()
    .filter(|t| associative(n, t))
    .collect::<Vec<_>>();
    let mut out = Vec::new();
    for add in &adds {
        for mul in &muls {
            let distributive = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| mul[x * n + add[y * n + z]] == add[mul[x * n + y] * n + mul[x * n + z]]))
            });
            if distributive {
                let k = out.len();
                out.push(FiniteSemiring::from_flat_unchecked(
                    format!("T{n}.{k}"),
                    names.clone(),
                    add.clone(),
                    mul.clone(),
                    0,
                    n - 1,
                ));
            }
        }
    }
    out
}

/// All commutative tables agreeing with `fixed` where it is defined.
fn tables(n: usize, fixed: impl Fn(usize, usize) -> Option<usize>) -> Vec<Vec<usize>> {
    let free: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).filter(|&(x, y)| fixed(x, y).is_none()).collect();
    let mut base = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            base[x * n + y] = fixed(x, y).unwrap_or(0);
        }
    }
    let total = n.pow(free.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut t = base.clone();
        for &(x, y) in &free {
            let v = code % n;
            code /= n;
            t[x * n + y] = v;
            t[y * n + x] = v;
        }
        out.push(t);
    }
    out
}

fn associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::validate;

    #[test]
    fn generated_tables_validate() {
        for n in 2..=4 {
            let all = all_semirings(n);
            assert!(!all.is_empty());
            for r in &all {
                let rows = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
                    (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
                };
                let v = validate(r.names(), &rows(&|x, y| r.sum(x, y)), &rows(&|x, y| r.product(x, y)), 0, n - 1);
                assert!(v.is_empty(), "{}: {:?}", r.name(), v);
            }
        }
        assert_eq!(all_semirings(2).len(), 1);
    }

    #[test]
    fn corpus_tables_are_generated() {
        for (n, r) in [(3, FiniteSemiring::chain(3)), (4, FiniteSemiring::b_z2()), (4, FiniteSemiring::chain(4))] {
            assert!(all_semirings(n).iter().any(|t| t.is_isomorphic(&r)));
        }
    }
}
