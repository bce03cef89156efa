use latticehom::acceptance::{boolean_twelve_instance, figure_instance, worked_examples};
use latticehom::config::Guards;
use latticehom::lattices::partition_lattice;
use latticehom::shelling::{is_nbc_plus, AtomOrdering};

#[test]
fn every_worked_example_holds() {
    for (name, ok) in worked_examples(&Guards::default()).unwrap() {
        assert!(ok, "{name}");
    }
}

#[test]
fn single_column_whitney_filling() {
    assert!(figure_instance(&Guards::default()).unwrap());
}

#[test]
fn boolean_twelve_row_factor_annihilates() {
    assert!(boolean_twelve_instance(&Guards::default()).unwrap());
}

#[test]
fn pi4_word_13_12_14_is_nbc_plus() {
    let l = partition_lattice(4).unwrap();
    let pos = |t: &str| l.atom_position(l.find(t).unwrap()).unwrap();
    let w = [pos("|13|"), pos("|12|"), pos("|14|")];
    assert!(is_nbc_plus(&l, &AtomOrdering::natural(&l), &w).unwrap());
}
