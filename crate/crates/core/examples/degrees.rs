use polefiber::sysmodel::{berstein_is_odd, classify_genericity, schubert_degree, Field};

fn main() -> polefiber::Result<()> {
    println!("Schubert degrees d(m,p):");
    print!("{:>6}", "m\\p");
    for p in 1..=5 {
        print!("{p:>10}");
    }
    println!();
    for m in 1..=5 {
        print!("{m:>6}");
        for p in 1..=5 {
            let d = schubert_degree(m, p);
            let mark = if berstein_is_odd(m, p) { "*" } else { " " };
            print!("{:>9}{mark}", d.to_string());
        }
        println!();
    }
    println!("(* odd)\n");

    for (m, p, n, field) in [
        (2, 2, 3, Field::Real),
        (2, 2, 4, Field::AlgebraicallyClosed),
        (2, 3, 6, Field::Real),
        (2, 2, 4, Field::Real),
        (4, 2, 8, Field::Real),
        (3, 3, 9, Field::Real),
        (2, 2, 5, Field::Real),
    ] {
        let v = classify_genericity(m, p, n, field)?;
        println!("({m},{p},{n}) {field:?}: {v}");
    }
    Ok(())
}
