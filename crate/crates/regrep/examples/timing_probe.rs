use std::sync::Arc;
use std::time::Instant;

use anv_alg::ProductEntry;
use core_linalg::Scalar;

fn main() {
    let r = Arc::new(voa_core::ModuleRealization::heisenberg());
    let t0 = Instant::now();
    let table = Arc::new(anv_alg::quotient_table(&r, 0, 10).expect("table"));
    println!(
        "heisenberg n=0 cutoff=10: dim={} in {:?}",
        table.dim(),
        t0.elapsed()
    );

    let boson_class = match table.reduce_to_class(&r.boson_vector()).expect("reduce") {
        ProductEntry::Reduced(c) => c,
        ProductEntry::NeedsCutoff { .. } => unreachable!(),
    };
    let action = Arc::new(
        regrep::AnAction::character(table.clone(), &boson_class, &Scalar::zero())
            .expect("character"),
    );
    let t1 = Instant::now();
    let result = regrep::induce(&action, 5).expect("induce");
    println!(
        "induce heisenberg K=5: dims={:?} below={:?} h={} ok={} in {:?}",
        result.dims,
        result.below,
        result.lowest_weight,
        result.support_bound_ok,
        t1.elapsed()
    );

    let c = Scalar::from_int(1) / Scalar::from_int(2);
    let h = Scalar::from_int(3) / Scalar::from_int(7);
    let rv = Arc::new(voa_core::ModuleRealization::virasoro(c));
    let t2 = Instant::now();
    let tv = Arc::new(anv_alg::quotient_table(&rv, 0, 10).expect("vir table"));
    println!(
        "virasoro n=0 cutoff=10: dim={} in {:?}",
        tv.dim(),
        t2.elapsed()
    );
    let va = Arc::new(
        regrep::AnAction::character(tv.clone(), tv.omega_class(), &h).expect("vir character"),
    );
    let t3 = Instant::now();
    let vres = regrep::induce(&va, 3).expect("vir induce");
    println!(
        "induce virasoro K=3: dims={:?} below={:?} h={} ok={} in {:?}",
        vres.dims,
        vres.below,
        vres.lowest_weight,
        vres.support_bound_ok,
        t3.elapsed()
    );
}
