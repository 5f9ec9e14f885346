use eqgb::cli::{poly_to_decl, ProblemFile, SchemaDecl, ConstraintDecl, FieldDecl, OrderDecl};
use eqgb::finite::{segre_quadric_representatives, segre_rings};
use eqgb::order::OrderSpec;

fn main() {
    let reps = segre_quadric_representatives(2).unwrap();
    let (y_ring, _) = segre_rings(2).unwrap();
    let order = OrderSpec::declaration_lex(&y_ring);
    let pf = ProblemFile {
        ring: vec![SchemaDecl { name: "y".into(), fixed: vec![], free: 2, constraint: ConstraintDecl::None }],
        field: FieldDecl::Rational,
        order: OrderDecl::Preset("rowlex".into()),
        generators: reps.iter().map(|p| poly_to_decl(&y_ring, &order, p)).collect(),
        config: Default::default(),
    };
    println!("{}", pf.to_json());
    eprintln!("count: {}", reps.len());
}
