use polefiber::experiments::shapiro_system;
use polefiber::polemap::{chi_mfd, chi_state};
use polefiber::ratpoly::{rat, RatMatrix};
use polefiber::sysmodel::{controllable, observable, realize_left_mfd, transfer_consistency, PlantModel};

fn main() -> polefiber::Result<()> {
    let (d, n) = shapiro_system(2, 2, None)?;
    println!("det D = {}", d.det()?.pretty("s"));

    let ss = realize_left_mfd(&d, &n)?;
    println!("realized order {}", ss.n());
    println!("controllable: {}, observable: {}", controllable(&ss.a, &ss.b)?, observable(&ss.a, &ss.c)?);

    let plant = PlantModel::from_mfd(d.clone(), n.clone())?.with_realization()?;
    println!("C(sI-A)^-1 B = D^-1 N at sample points: {}", transfer_consistency(&plant)?);

    let k = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(-3, 1)], vec![rat(2, 5), rat(7, 3)]])?;
    let from_state = chi_state(&ss, &k)?;
    let from_fraction = chi_mfd(&d, &n, &k)?;
    println!("det(sI - A - BKC) = {}", from_state.pretty("s"));
    println!("same from D, N:    {}", from_state == from_fraction);
    Ok(())
}
