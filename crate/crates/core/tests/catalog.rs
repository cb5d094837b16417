mod common;

use std::collections::BTreeSet;

use paralogic::catalog::{
    compute_x, enumerate_godel_catalog, enumerate_luk_catalog, named, parse_logic, saturated_product, submatrix_embedding,
};
use paralogic::random::{seeded, FormulaGen};
use paralogic::{Limits, ProductMatrix};

/// Primes `p | n` with `2 ceil(i p / n) <= p`, by trial division.
fn x_oracle(n: usize, i: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&p| (2..p).all(|d| p % d != 0) && n.is_multiple_of(p))
        .filter(|&p| 2 * (i * p).div_ceil(n) <= p)
        .collect()
}

#[test]
fn prime_sets() {
    for n in 1..=30 {
        for i in 1..=n {
            assert_eq!(compute_x(n, i).unwrap(), x_oracle(n, i), "n = {n}, i = {i}");
        }
    }
    assert_eq!(compute_x(6, 3).unwrap(), vec![2]);
    assert_eq!(compute_x(6, 1).unwrap(), vec![2, 3]);
    assert!(compute_x(15, 7).unwrap().is_empty());
    assert!(saturated_product(6, 3, &[]).is_err());
    assert!(saturated_product(6, 3, &[3]).is_err());
    assert_eq!(saturated_product(6, 1, &[3, 2]).unwrap().family[0].to_string(), "LV4[>=1] x LV3[>=1]");
}

#[test]
fn godel_catalog_shapes() {
    let c = enumerate_godel_catalog(5, 3).unwrap();
    assert_eq!(c.len(), 175);
    let names: BTreeSet<&str> = c.entries.iter().filter_map(|d| d.name.as_deref()).collect();
    for n in ["CPL", "J3", "J4", "J3xJ4", "J2xJ3"] {
        assert!(names.contains(n), "{n}");
    }
    // entries are distinct and normalized
    let texts: BTreeSet<String> = c.entries.iter().map(|d| d.family[0].to_string()).collect();
    assert_eq!(texts.len(), c.len());
    assert!(c.entries.iter().all(|d| d.family[0].is_normalized()));
    assert_eq!(enumerate_godel_catalog(2, 3).unwrap().len(), 1);
}

#[test]
fn edges_carry_valid_certificates() {
    let c = enumerate_godel_catalog(5, 2).unwrap();
    let edges = c.edges();
    assert!(!edges.is_empty());
    for e in &edges {
        assert!(e.certificate.verify(c.matrix(e.to), c.matrix(e.from)));
    }
    let cpl = c.find("CPL").unwrap();
    // every entry has CPL among its extensions or is CPL
    for k in 0..c.len() {
        assert!(k == cpl || edges.iter().any(|e| e.from == k && e.to == cpl), "{}", c.entries[k].label());
    }
    let covering = c.covering_edges(&edges);
    assert!(covering.len() < edges.len());
    assert!(covering.iter().all(|e| edges.contains(e)));
}

#[test]
fn extensions_preserve_consequence() {
    // certified edges are sound: whatever holds below holds above
    let c = enumerate_godel_catalog(5, 2).unwrap();
    let edges = c.edges();
    let mut rng = seeded(7);
    let gen = FormulaGen::godel(2, 3);
    let lim = Limits::default();
    let queries: Vec<_> = (0..40).map(|_| gen.query(&mut rng, 2)).collect();
    for (g, phi) in &queries {
        let holds: Vec<bool> = c
            .entries
            .iter()
            .map(|d| d.entails(g, phi, &lim).unwrap().holds)
            .collect();
        for e in &edges {
            assert!(!holds[e.from] || holds[e.to], "{} -> {}", c.entries[e.from].label(), c.entries[e.to].label());
        }
    }
}

#[test]
fn theorems_of_sublogics_of_cpl_persist() {
    let c = enumerate_godel_catalog(5, 3).unwrap();
    let edges = c.edges();
    let cpl = c.find("CPL").unwrap();
    let below: Vec<usize> = edges.iter().filter(|e| e.to == cpl).map(|e| e.from).collect();
    let mut rng = seeded(11);
    let gen = FormulaGen::godel(2, 4);
    let lim = Limits::default();
    for _ in 0..30 {
        let f = gen.formula(&mut rng);
        if !named("CPL").unwrap().entails(&[], &f, &lim).unwrap().holds {
            continue;
        }
        for e in edges.iter().filter(|e| below.contains(&e.from)) {
            if c.entries[e.from].entails(&[], &f, &lim).unwrap().holds {
                assert!(c.entries[e.to].entails(&[], &f, &lim).unwrap().holds, "{f}");
            }
        }
    }
}

#[test]
fn embedding_direction() {
    let j3 = named("J3").unwrap().family[0].clone();
    let gv5: ProductMatrix = "GV5~[>=2]".parse().unwrap();
    // J3 sits inside GV5~ at 1/2, so GV5~[>=2] has the smaller logic
    assert!(submatrix_embedding(&j3, &gv5).is_some());
    assert!(submatrix_embedding(&gv5, &j3).is_none());
    let j4 = named("J4").unwrap().family[0].clone();
    assert!(submatrix_embedding(&j3, &j4).is_none());
    assert!(submatrix_embedding(&j4, &j3).is_none());
}

#[test]
fn luk_catalogs() {
    let c = enumerate_luk_catalog(4, 1).unwrap();
    let texts: Vec<String> = c.entries.iter().map(|d| d.label()).collect();
    assert!(texts.contains(&"L(2,1)".to_string()));
    assert!(texts.contains(&"L(4,1)".to_string()));
    for e in c.edges() {
        assert!(e.certificate.verify(c.matrix(e.to), c.matrix(e.from)));
    }
    assert!(enumerate_luk_catalog(4, 0).is_err());
    assert_eq!(parse_logic("L(15,7)").unwrap().family[0].to_string(), "LV16[>=7]");
}
