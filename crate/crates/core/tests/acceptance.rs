// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxeterkit::arith::Cyclotomic;
use coxeterkit::classify::{
    affine_catalog, catalog_graph, classify, is_positive_definite, ClassificationResult, TypeLabel,
};
use coxeterkit::coxeter::Label;
use coxeterkit::family::{
    dihedral_irreducibles, dn_character_table, hyperoctahedral_character_table, hyperoctahedral_irreducibles,
    hyperoctahedral_irreducibles_on, rotation_character, rotation_subgroup,
};
use coxeterkit::group::{enumerate_group, verify_presentation, FiniteGroup, Permutation, Subgroup};
use coxeterkit::rep::{
    character_of, decompose, induce_character, inner_product, restrict_character, tensor_decompose, ClassFunction,
    Representation,
};
use coxeterkit::symmetric::{
    character_by_cycle_type, hook_dimension, hook_product, partitions_of, specht_module, specht_module_in,
    symmetric_character_table, Partition,
};

const MAX: u128 = 100_000;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

// Euler's pentagonal recurrence, independent of the enumerator.
fn partition_count(n: usize) -> usize {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p[n] as usize
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn types_of(r: &ClassificationResult) -> Option<Vec<TypeLabel>> {
    r.types()
}

fn catalog_types(max_rank: usize) -> Vec<TypeLabel> {
    let mut ts = Vec::new();
    ts.extend((1..=max_rank).map(TypeLabel::A));
    ts.extend((2..=max_rank).map(TypeLabel::B));
    ts.extend((4..=max_rank).map(TypeLabel::D));
    ts.extend((6..=max_rank.min(8)).map(TypeLabel::E));
    if max_rank >= 4 {
        ts.push(TypeLabel::F4);
    }
    ts.extend([3usize, 4].into_iter().filter(|&r| r <= max_rank).map(TypeLabel::H));
    if max_rank >= 2 {
        ts.push(TypeLabel::I2(5));
        ts.extend((7..=12).map(TypeLabel::I2));
    }
    ts
}

fn gram_is_identity(chars: &[ClassFunction]) -> Result<(), String> {
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let ip = e(inner_product(a, b))?;
            ensure(ip == int((i == j) as i64), format!("<χ{i}, χ{j}> = {ip}"))?;
        }
    }
    Ok(())
}

fn squares(chars: &[ClassFunction]) -> Result<u128, String> {
    chars
        .iter()
        .map(|c| c.integer_degree().map(|d| (d as u128) * (d as u128)).ok_or("non-integral degree".to_string()))
        .sum()
}

fn c1_roundtrip() -> Outcome {
    let start = Instant::now();
    let ts: Vec<TypeLabel> = (1..=9)
        .map(TypeLabel::A)
        .chain((2..=8).map(TypeLabel::B))
        .chain((4..=8).map(TypeLabel::D))
        .chain((6..=8).map(TypeLabel::E))
        .chain([TypeLabel::F4, TypeLabel::H(3), TypeLabel::H(4), TypeLabel::I2(5)])
        .chain((7..=12).map(TypeLabel::I2))
        .collect();
    for &t in &ts {
        let r = e(classify(&e(catalog_graph(t))?))?;
        ensure(types_of(&r) == Some(vec![t]), format!("{t} classified as {r}"))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 1.0, format!("took {secs:.3} s"))?;
    Ok(format!("{} types in {secs:.3} s", ts.len()))
}

fn c2_affine() -> Outcome {
    let mut count = 0;
    for (name, g) in affine_catalog(8).into_iter().filter(|(_, g)| g.rank() <= 8) {
        let det = e(g.gram_matrix().determinant())?;
        ensure(det.is_zero(), format!("{name}: det = {det}"))?;
        ensure(!e(is_positive_definite(&g))?.positive_definite, format!("{name} positive definite"))?;
        count += 1;
    }
    Ok(format!("{count} affine graphs, det = 0, not positive definite"))
}

fn c3_subgraphs() -> Outcome {
    let mut count = 0;
    for t in catalog_types(8) {
        let g = e(catalog_graph(t))?;
        let mut candidates = Vec::new();
        for v in 0..g.rank() {
            candidates.push(e(g.subgraph(&BTreeSet::from([v]), &BTreeMap::new()))?);
        }
        for (i, j, m) in g.edges() {
            if let Some(k) = m.finite() {
                candidates.push(e(g.subgraph(&BTreeSet::new(), &BTreeMap::from([((i, j), Label::Finite(k - 1))])))?);
            }
        }
        for h in candidates {
            let r = e(classify(&h))?;
            ensure(r.is_finite(), format!("subgraph of {t}: {r}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} subgraphs finite"))
}

fn c4_orders() -> Outcome {
    let mut cases: Vec<(TypeLabel, u128)> = Vec::new();
    for n in 1..=5u64 {
        cases.push((TypeLabel::A(n as usize), factorial(n + 1)));
    }
    for n in 2..=4u64 {
        cases.push((TypeLabel::B(n as usize), (1u128 << n) * factorial(n)));
    }
    cases.push((TypeLabel::D(4), (1u128 << 3) * factorial(4)));
    for m in 3..=12u32 {
        cases.push((TypeLabel::I2(m), 2 * m as u128));
    }
    for &(t, expected) in &cases {
        let g = e(enumerate_group(t, MAX))?;
        ensure(g.order() as u128 == expected, format!("{t}: {} != {expected}", g.order()))?;
    }
    Ok(format!("{} groups", cases.len()))
}

fn c5_presentations() -> Outcome {
    let mut pairs = 0;
    for t in [TypeLabel::A(5), TypeLabel::B(4), TypeLabel::D(4), TypeLabel::I2(12)] {
        let g = e(catalog_graph(t))?;
        let p = e(verify_presentation(t, MAX))?;
        for &(i, j, m, order) in &p.pairs {
            let label = g.label(i, j).finite().unwrap_or(0);
            let expected = if i == j { 1 } else { label };
            ensure(m == expected && order == m as usize, format!("{t}: s{i}s{j} order {order}, label {m}"))?;
            pairs += 1;
        }
        ensure(p.generates, format!("{t}: generators do not generate"))?;
    }
    Ok(format!("{pairs} generator pairs"))
}

fn c6_s3_example() -> Outcome {
    let rho = e(specht_module(&part(&[2, 1])))?;
    let chi = e(character_of(&rho))?;
    let g = rho.group().clone();
    let cd = g.classes();
    let mut by_type = BTreeMap::new();
    for c in 0..cd.count() {
        let p = g.element(cd.representative(c)).as_perm().unwrap().cycle_type();
        by_type.insert(p.parts().to_vec(), chi.value(c).clone());
    }
    let got = [vec![1, 1, 1], vec![2, 1], vec![3]].map(|k| by_type.get(&k).cloned());
    ensure(got == [Some(int(2)), Some(int(0)), Some(int(-1))], format!("{got:?}"))?;
    let ip = e(inner_product(&chi, &chi))?;
    ensure(ip == int(1), format!("<χ,χ> = {ip}"))?;
    Ok("χ = (2, 0, -1), <χ,χ> = 1".into())
}

fn c7_hooks() -> Outcome {
    let mut shapes = 0;
    for n in 1..=6 {
        let g = Arc::new(e(FiniteGroup::symmetric(n))?);
        for l in e(partitions_of(n))? {
            let d = e(specht_module_in(&g, &l))?.dim();
            ensure(BigUint::from(d) == hook_dimension(&l), format!("{l}: Specht {d}, hook {}", hook_dimension(&l)))?;
            shapes += 1;
        }
    }
    let l = part(&[5, 3, 1]);
    let (h, d) = (hook_product(&l), hook_dimension(&l));
    ensure(
        h == BigUint::from(8064u32) && d == BigUint::from(45u32),
        format!(
            "{shapes} shapes agree, but (5,3,1) has h = {h}, dim = {d}; expected h = 8064, dim = 45 \
             (h = 8064 belongs to (5,3,2), dim {})",
            hook_dimension(&part(&[5, 3, 2]))
        ),
    )?;
    Ok(format!("{shapes} shapes; (5,3,1): h = {h}, dim = {d}"))
}

fn c8_completeness() -> Outcome {
    for n in 1..=6 {
        let t = e(symmetric_character_table(n))?;
        ensure(squares(&t.characters)? == factorial(n as u64), format!("S{n}"))?;
    }
    for n in 1..=12 {
        let s: BigUint = e(partitions_of(n))?.iter().map(|l| hook_dimension(l).pow(2)).sum();
        ensure(s == BigUint::from(factorial(n as u64)), format!("hooks S{n}"))?;
    }
    for n in 1..=4 {
        let t = e(hyperoctahedral_character_table(n))?;
        ensure(squares(&t.characters)? == (1u128 << n) * factorial(n as u64), format!("B{n}"))?;
    }
    let d4 = squares(&e(dn_character_table(4))?.characters)?;
    ensure(d4 == 192, format!("D4: {d4}"))?;
    for m in 3..=24u32 {
        let s: u64 = e(dihedral_irreducibles(m))?.iter().map(|i| i.dim * i.dim).sum();
        ensure(s == 2 * m as u64, format!("I2({m}): {s}"))?;
    }
    Ok("S_n (n<=6; hooks n<=12), B_n (n<=4), D4 = 192, I2(m) (m<=24)".into())
}

fn c9_b3() -> Outcome {
    let mut dims: Vec<u64> = e(hyperoctahedral_irreducibles(3))?.iter().map(|i| i.dim).collect();
    dims.sort();
    ensure(dims == vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3], format!("{dims:?}"))?;
    Ok(format!("{dims:?}"))
}

fn c10_class_counts() -> Outcome {
    for n in 1..=6 {
        let k = e(FiniteGroup::symmetric(n))?.classes().count();
        ensure(k == partition_count(n), format!("S{n}: {k} != p({n})"))?;
    }
    for n in 1..=4 {
        let k = e(FiniteGroup::hyperoctahedral(n))?.classes().count();
        let expected: usize = (0..=n).map(|a| partition_count(a) * partition_count(n - a)).sum();
        ensure(k == expected, format!("B{n}: {k} != {expected}"))?;
    }
    Ok("S_n (n<=6), B_n (n<=4)".into())
}

fn c11_orthonormality() -> Outcome {
    for n in 1..=5 {
        gram_is_identity(&e(symmetric_character_table(n))?.characters).map_err(|m| format!("S{n}: {m}"))?;
    }
    for n in 1..=3 {
        gram_is_identity(&e(hyperoctahedral_character_table(n))?.characters).map_err(|m| format!("B{n}: {m}"))?;
    }
    gram_is_identity(&e(dn_character_table(4))?.characters).map_err(|m| format!("D4: {m}"))?;
    for m in 3..=12u32 {
        let chars: Vec<_> = e(dihedral_irreducibles(m))?.into_iter().map(|i| i.character).collect();
        gram_is_identity(&chars).map_err(|msg| format!("I2({m}): {msg}"))?;
    }
    Ok("S_n (n<=5), B_n (n<=3), D4, I2(m) (m<=12)".into())
}

// χ_α ⊗ χ_β on S_a × S_b, evaluated from the cycle types on each block.
fn young_character(h: &Subgroup, a: usize, alpha: &Partition, beta: &Partition) -> Result<ClassFunction, String> {
    let g = h.group();
    let n = g.element(0).as_perm().unwrap().degree();
    let (ca, cb) = (e(character_by_cycle_type(alpha))?, e(character_by_cycle_type(beta))?);
    let cd = g.classes().clone();
    let mut values = Vec::new();
    for &r in cd.representatives() {
        let p = g.element(r).as_perm().unwrap();
        let left = e(Permutation::new((0..a).map(|i| p.apply(i)).collect()))?;
        let right = e(Permutation::new((a..n).map(|i| p.apply(i) - a).collect()))?;
        values.push(&ca[&left.cycle_type()] * &cb[&right.cycle_type()]);
    }
    e(ClassFunction::new(cd, values))
}

fn c12_frobenius() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let tables: Vec<_> = (2..=5).map(|n| symmetric_character_table(n).unwrap()).collect();
    let mut done = 0;
    while done < 50 {
        let (chi, phi, h) = if rng.gen_bool(0.5) {
            let n = rng.gen_range(2..=5);
            let a = rng.gen_range(1..n);
            let table = &tables[n - 2];
            let g = table.group.clone();
            let idx: Vec<usize> = (0..g.order())
                .filter(|&i| (0..a).all(|j| g.element(i).as_perm().unwrap().apply(j) < a))
                .collect();
            let h = e(Subgroup::from_indices(g, "S_a x S_b", &idx))?;
            let pa = e(partitions_of(a))?;
            let pb = e(partitions_of(n - a))?;
            let alpha = &pa[rng.gen_range(0..pa.len())];
            let beta = &pb[rng.gen_range(0..pb.len())];
            let chi = young_character(&h, a, alpha, beta)?;
            let phi = table.characters[rng.gen_range(0..table.characters.len())].clone();
            (chi, phi, h)
        } else {
            let m = rng.gen_range(3..=12u32);
            let g = Arc::new(e(FiniteGroup::dihedral(m))?);
            let irr = e(coxeterkit::family::dihedral_irreducibles_on(&g, m))?;
            let c = e(rotation_subgroup(&g))?;
            let chi = e(rotation_character(&c, m, rng.gen_range(0..m as i64)))?;
            let phi = irr[rng.gen_range(0..irr.len())].character.clone();
            (chi, phi, c)
        };
        let lhs = e(inner_product(&e(induce_character(&chi, &h))?, &phi))?;
        let rhs = e(inner_product(&chi, &e(restrict_character(&phi, &h))?))?;
        ensure(lhs == rhs, format!("pair {done}: {lhs} != {rhs}"))?;
        done += 1;
    }
    Ok(format!("{done} seeded pairs"))
}

fn c13_clifford() -> Outcome {
    let table = e(dn_character_table(4))?;
    ensure(table.characters.len() == 13, format!("|Irr(D4)| = {}", table.characters.len()))?;
    let bn = Arc::new(e(FiniteGroup::hyperoctahedral(4))?);
    let dn = e(Subgroup::new(bn.clone(), table.group.clone()))?;
    let find = |label: String| -> Result<&ClassFunction, String> {
        let i = table.labels.iter().position(|l| *l == label).ok_or(format!("missing {label}"))?;
        Ok(&table.characters[i])
    };
    let mut split = 0;
    for u in e(hyperoctahedral_irreducibles_on(&bn, 4))? {
        let res = e(restrict_character(&u.character, &dn))?;
        let norm = e(inner_product(&res, &res))?;
        let same = u.label.lambda == u.label.mu;
        ensure(norm == int(if same { 2 } else { 1 }), format!("{}: <Res,Res> = {norm}", u.label))?;
        if same {
            let l = u.label.lambda.comma_form();
            let plus = find(format!("D:({l}|{l}|+)"))?;
            let minus = find(format!("D:({l}|{l}|-)"))?;
            ensure(plus != minus, format!("{}: χ+ = χ-", u.label))?;
            ensure(e(plus.add(minus))? == res, format!("{}: χ+ + χ- != Res", u.label))?;
            split += 1;
        }
    }
    Ok(format!("13 irreducibles, {split} split pairs"))
}

fn c14_permutation() -> Outcome {
    for n in 2..=6 {
        let table = e(symmetric_character_table(n))?;
        let g = table.group.clone();
        let gens = g.generators().iter().map(|&s| g.element(s).natural_matrix()).collect();
        let rho: Representation<Cyclotomic> = e(Representation::new(g.clone(), gens))?;
        let parts = e(decompose(&rho, &table.characters))?;
        let (triv, std) = (part(&[n]), part(&[n - 1, 1]));
        let labels: Vec<(String, u64)> = parts.iter().map(|&(i, k)| (table.labels[i].clone(), k)).collect();
        let expected = {
            let mut v = vec![(triv.to_string(), 1), (std.to_string(), 1)];
            v.sort_by_key(|(l, _)| table.labels.iter().position(|x| x == l));
            v
        };
        ensure(labels == expected, format!("S{n}: {labels:?}"))?;
    }
    Ok("trivial ⊕ standard, multiplicities (1,1) for 2 <= n <= 6".into())
}

fn c15_tensor() -> Outcome {
    let t3 = e(symmetric_character_table(3))?;
    let idx = |t: &coxeterkit::rep::CharacterTable, l: &str| t.labels.iter().position(|x| x == l).unwrap();
    let std3 = &t3.characters[idx(&t3, "2+1")];
    let m = e(tensor_decompose(std3, std3, &t3.characters))?;
    ensure(m == vec![1, 1, 1], format!("std⊗std = {m:?}"))?;
    let t6 = e(symmetric_character_table(6))?;
    let chi = &t6.characters[idx(&t6, "3+2+1")];
    let m6 = e(tensor_decompose(chi, chi, &t6.characters))?;
    ensure(m6.iter().all(|&k| k >= 1), format!("(3,2,1)⊗(3,2,1) = {m6:?}"))?;
    Ok(format!("std⊗std = triv+sgn+std; (3,2,1)^2 covers all {} irreducibles of S6", m6.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("classification round-trip", c1_roundtrip),
        ("affine rejection", c2_affine),
        ("subgraph closure", c3_subgraphs),
        ("group orders", c4_orders),
        ("presentation verification", c5_presentations),
        ("S3 worked example", c6_s3_example),
        ("hook-length agreement", c7_hooks),
        ("completeness identities", c8_completeness),
        ("B3 spectrum", c9_b3),
        ("class counts", c10_class_counts),
        ("orthonormality", c11_orthonormality),
        ("Frobenius reciprocity", c12_frobenius),
        ("Clifford dichotomy on D4", c13_clifford),
        ("Maschke decomposition", c14_permutation),
        ("tensor decomposition", c15_tensor),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} — {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} — {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
