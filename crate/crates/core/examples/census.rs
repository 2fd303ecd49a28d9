//! Every constant and balanced function on 1-3 bits, with class counts.

use djnmr::entangle::{census_by_class, EntanglementKind};
use djnmr::oracles::{enumerate_functions, Classification};

fn main() -> djnmr::Result<()> {
    for n in 1..=3 {
        let fs = enumerate_functions(n)?;
        let constant = fs.iter().filter(|f| f.classify() == Classification::Constant).count();
        println!("n={n}: {} functions ({constant} constant)", fs.len());
    }

    let census = census_by_class(3)?;
    for kind in EntanglementKind::ALL {
        let keys = &census.members[&kind];
        println!("{kind:<20} {:>2}  first keys {:?}", keys.len(), &keys[..4]);
    }
    Ok(())
}
