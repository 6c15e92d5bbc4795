use fpcoh_core::*;

fn ring(p: u64, n: usize) -> PolyRing {
    PolyRing::grevlex(p, n).unwrap()
}

fn polys(r: PolyRing, s: &str) -> Vec<Polynomial> {
    parse_polynomial_list(r, s).unwrap()
}

fn ideal(r: PolyRing, s: &str) -> Ideal {
    Ideal::new(r, polys(r, s)).unwrap()
}

fn elem(r: PolyRing, s: &str) -> FreeElem {
    FreeElem::new(r, polys(r, s)).unwrap()
}

#[test]
fn parse_and_print() {
    let r = ring(5, 2);
    let f = parse_polynomial(r, "3*x1^2*x2 - x2 + 7").unwrap();
    assert_eq!(f.to_string(), "-2*x1^2*x2 - x2 + 2");
    assert!(matches!(parse_polynomial(r, "x3"), Err(AlgebraError::VariableOutOfRange { .. })));
    assert!(matches!(parse_polynomial(r, "x1 +* x2"), Err(AlgebraError::Parse { .. })));
}

#[test]
fn frobenius_power_is_coefficientwise() {
    let r = ring(3, 2);
    let f = parse_polynomial(r, "x1 + 2*x2").unwrap();
    assert_eq!(f.frobenius_power(3).unwrap(), f.pow(3));
    assert_eq!(f.pow(3).to_string(), "x1^3 - x2^3");
}

#[test]
fn single_column_basis_is_itself() {
    let r = ring(3, 2);
    let gb = module_groebner_basis(r, 2, &[elem(r, "x1, 0")], &Limits::default()).unwrap();
    assert_eq!(gb, vec![elem(r, "x1, 0")]);
}

#[test]
fn standard_basis_spans_everything() {
    let r = ring(3, 2);
    let span = SubmoduleBasis::new(r, 2, &[elem(r, "1, 0"), elem(r, "0, 1")], &Limits::default()).unwrap();
    assert!(span.is_whole());
    assert!(span.contains(&elem(r, "x1^3 - x2, x1*x2")).unwrap());
}

#[test]
fn koszul_syzygy_up_to_sign() {
    let r = ring(2, 2);
    let syz = syzygies(r, 1, &[elem(r, "x1"), elem(r, "x2")], &Limits::default()).unwrap();
    assert_eq!(syz.len(), 1);
    let s = &syz[0];
    assert_eq!(s.entry(0).to_string(), "x2");
    assert_eq!(s.entry(1).to_string(), "x1");
}

#[test]
fn free_subquotient_is_free() {
    let r = ring(3, 2);
    let basis = [elem(r, "1, 0"), elem(r, "0, 1")];
    let m = subquotient_presentation(r, 2, &basis, &[], &Limits::default()).unwrap();
    assert_eq!(m.rank(), 2);
    assert!(m.relations().columns().is_empty());
}

#[test]
fn residue_field_is_all_torsion() {
    let r = ring(5, 2);
    let a = RationalPoint::new(&r, &[2, 3]).unwrap();
    let m = ModulePresentation::cyclic(&Ideal::maximal_at(r, &a).unwrap());
    let t = module_h0m(&m, &a, &Limits::default()).unwrap();
    assert_eq!(t.length, ColengthCount::Finite(1));
    let free = ModulePresentation::free(r, 2);
    assert!(module_h0m(&free, &a, &Limits::default()).unwrap().is_zero());
}

#[test]
fn koszul_resolution_of_the_maximal_ideal() {
    let r = ring(3, 4);
    let res = free_resolution(&ModulePresentation::cyclic(&Ideal::maximal_at_origin(r)), 4, &Limits::default()).unwrap();
    assert_eq!(res.ranks(), vec![1, 4, 6, 4, 1]);
    assert!(res.compositions_vanish().unwrap());
}

#[test]
fn tight_stillman_case() {
    for s in 1..=4 {
        let r = ring(2, 4);
        let gens: Vec<Polynomial> = (0..s).map(|i| Polynomial::var(r, i).unwrap()).collect();
        let i = Ideal::new(r, gens).unwrap();
        assert_eq!(projective_dimension(&i).unwrap(), s);
    }
}

#[test]
fn two_term_koszul_composite() {
    let r = ring(7, 3);
    let f = polys(r, "x1 + x2^2, x3");
    let k = build_koszul(&f, 2).unwrap();
    let rv = parse_polynomial(r, "x1*x2 - 3").unwrap();
    let v = k.differential(0).apply(&FreeElem::new(r, vec![rv.clone()]).unwrap()).unwrap();
    assert_eq!(*v.entry(0), (f[0].pow(2) * rv.clone()).neg());
    assert!(k.differential(1).apply(&v).unwrap().is_zero());
}

#[test]
fn nonzerodivisor_kills_zeroth_cohomology() {
    let r = ring(3, 2);
    let k = build_koszul(&polys(r, "x1*x2, x1^2 + x2"), 1).unwrap();
    let h0 = koszul_cohomology(&k, 0, &Limits::default()).unwrap();
    assert_eq!(h0.rank(), 0);
}

#[test]
fn bracket_power_of_two_generating_sets() {
    let r = ring(2, 2);
    let a = ideal(r, "x1 + x2, x2^2");
    let b = ideal(r, "x1 + x2, x1^2 + x2^2 + x1*x2");
    assert!(a.equals(&b).unwrap());
    let lvl = FrobeniusLevel::new(2, 1).unwrap();
    assert!(bracket_power(&a, lvl).unwrap().equals(&bracket_power(&b, lvl).unwrap()).unwrap());
}

#[test]
fn prop_van_on_shifted_point() {
    let r = ring(3, 3);
    let a = RationalPoint::new(&r, &[1, 2, 0]).unwrap();
    let f = polys(r, "x1 - 1, x2 - 2");
    let c = verify_prop_van(&f, 2, &a, 3, &Limits::default()).unwrap();
    assert_eq!(c.outcome, Outcome::Pass);
}

#[test]
fn lex_and_elimination_orders_agree_on_ideals() {
    let gens = "x1^2 - x2, x1*x2 - x3";
    let r1 = PolyRing::new(5, 3, MonomialOrder::Lex).unwrap();
    let r2 = PolyRing::new(5, 3, MonomialOrder::Elimination(1)).unwrap();
    let i1 = ideal(r1, gens);
    let i2 = ideal(r2, gens);
    for g in i2.groebner_basis().unwrap() {
        assert!(i1.contains(&g.reorder(r1).unwrap()).unwrap());
    }
}
