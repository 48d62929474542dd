//! The invariant suite behind `coxeterkit verify`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::arith::Cyclotomic;
use crate::classify::{coxeter_group_order, TypeLabel};
use crate::error::Result;
use crate::family::{bipartitions, bn_conjugacy_parametrization, character_table, hyperoctahedral_irreducibles_on};
use crate::group::{compute_base, enumerate_group, geometric_rep, root_system, verify_presentation, FiniteGroup, Subgroup};
use crate::rep::{induce_character, inner_product, restrict_character};
use crate::symmetric::{hook_dimension, partitions_of, specht_module_in};

/// One named invariant and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// `PASS<TAB>name<TAB>detail`.
impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}\t{}\t{}", self.name, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub label: TypeLabel,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The subgroup generated by all simple generators except `drop`.
pub fn parabolic_subgroup(group: &Arc<FiniteGroup>, drop: usize) -> Result<Subgroup> {
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(_, &g)| g)
        .collect();
    let mut seen = HashSet::from([group.identity()]);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = group.mul(x, g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let idx: Vec<usize> = seen.into_iter().collect();
    Subgroup::from_indices(group.clone(), format!("{}\\{drop}", group.name()), &idx)
}

fn partition_count(n: usize) -> Result<usize> {
    Ok(partitions_of(n)?.len())
}

/// Runs every invariant that applies to `t`. Errors are reserved for
/// inputs outside the supported range; a broken invariant is a failed check.
pub fn verify_type(t: TypeLabel, max_order: u128) -> Result<VerifyReport> {
    let t = t.validate()?;
    let group = enumerate_group(t, max_order)?;
    let table = character_table(t)?;
    let order = coxeter_group_order(t)?;
    let mut checks = Vec::new();

    checks.push(Check::new(
        "group order",
        group.order() as u128 == order,
        format!("|W| = {} (expected {order})", group.order()),
    ));

    let pres = verify_presentation(t, max_order)?;
    let bad: Vec<String> = pres
        .pairs
        .iter()
        .filter(|p| p.2 as usize != p.3)
        .map(|p| format!("s{}s{} has order {} not {}", p.0, p.1, p.3, p.2))
        .collect();
    checks.push(Check::new(
        "coxeter presentation",
        pres.holds(),
        if bad.is_empty() { format!("{} generator pairs", pres.pairs.len()) } else { bad.join("; ") },
    ));

    let cd = group.classes();
    let sizes_ok = cd.sizes().iter().sum::<usize>() == group.order() && cd.sizes().iter().all(|s| group.order() % s == 0);
    checks.push(Check::new("class equation", sizes_ok, format!("{} classes", cd.count())));

    let expected_classes = match t {
        TypeLabel::A(n) => Some((partition_count(n + 1)?, format!("p({})", n + 1))),
        TypeLabel::B(n) => Some((bipartitions(n)?.len(), "bipartitions".to_string())),
        _ => None,
    };
    if let Some((k, what)) = expected_classes {
        checks.push(Check::new("class count", cd.count() == k, format!("{} classes, {what} = {k}", cd.count())));
    }

    let chars = &table.characters;
    checks.push(Check::new(
        "irreducible count",
        chars.len() == table.group.classes().count(),
        format!("{} irreducibles, {} classes", chars.len(), table.group.classes().count()),
    ));

    let mut gram_ok = true;
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            gram_ok &= inner_product(a, b)? == Cyclotomic::from_int((i == j) as i64);
        }
    }
    checks.push(Check::new("orthonormality", gram_ok, format!("{0}×{0} Gram matrix", chars.len())));

    let degrees: Vec<u64> = chars.iter().map(|c| c.integer_degree().unwrap_or(0)).collect();
    let sum: u64 = degrees.iter().map(|d| d * d).sum();
    checks.push(Check::new(
        "sum of squared degrees",
        sum as u128 == order,
        format!("{sum} = |W| = {order}"),
    ));

    let h = parabolic_subgroup(&table.group, table.group.generators().len() - 1)?;
    let mut frob_ok = true;
    for psi in chars {
        let chi = restrict_character(psi, &h)?;
        let ind = induce_character(&chi, &h)?;
        for phi in chars {
            frob_ok &= inner_product(&ind, phi)? == inner_product(&chi, &restrict_character(phi, &h)?)?;
        }
    }
    checks.push(Check::new(
        "frobenius reciprocity",
        frob_ok,
        format!("parabolic subgroup of order {}", h.group().order()),
    ));

    if t.rank() <= 8 {
        let rs = root_system(t);
        let base_ok = match &rs {
            Ok(phi) => compute_base(phi).map(|b| b.len() == t.rank()).unwrap_or(false),
            Err(_) => false,
        };
        checks.push(Check::new(
            "root system axioms",
            rs.is_ok(),
            rs.as_ref().map(|p| format!("{} roots", p.len())).unwrap_or_else(|e| e.to_string()),
        ));
        checks.push(Check::new("simple roots", base_ok, format!("base of size {}", t.rank())));
        let geo = geometric_rep(t, max_order);
        checks.push(Check::new(
            "geometric representation",
            geo.is_ok(),
            geo.as_ref().map(|_| "faithful homomorphism".to_string()).unwrap_or_else(|e| e.to_string()),
        ));
    }

    match t {
        TypeLabel::A(n) => {
            let mut ok = true;
            for shape in partitions_of(n + 1)? {
                ok &= BigUint::from(specht_module_in(&table.group, &shape)?.dim()) == hook_dimension(&shape);
            }
            checks.push(Check::new("hook length formula", ok, format!("all λ ⊢ {}", n + 1)));
        }
        TypeLabel::B(n) => {
            let report = bn_conjugacy_parametrization(n)?;
            checks.push(Check::new(
                "class parametrization",
                report.is_bijective(),
                format!("{} classes ↔ {} bipartitions", report.class_count, report.label_count),
            ));
        }
        TypeLabel::D(n) => {
            let bn = Arc::new(FiniteGroup::hyperoctahedral(n)?);
            let dn = Subgroup::new(bn.clone(), table.group.clone())?;
            let mut ok = true;
            for u in hyperoctahedral_irreducibles_on(&bn, n)? {
                let res = restrict_character(&u.character, &dn)?;
                let expected = if u.label.lambda == u.label.mu { 2 } else { 1 };
                ok &= inner_product(&res, &res)? == Cyclotomic::from_int(expected);
            }
            checks.push(Check::new("clifford dichotomy", ok, format!("{} irreducibles", chars.len())));
        }
        _ => {}
    }
    Ok(VerifyReport { label: t, checks })
}
