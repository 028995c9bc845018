use ndarray::Array2;
use ndarray_linalg::{Eigh, EigValsh, UPLO};
use std::time::Instant;

fn main() {
    let n = 2000;
    let mut a = Array2::<f64>::zeros((n, n));
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    for i in 0..n {
        for j in i..n {
            let v = next();
            a[[i, j]] = v;
            a[[j, i]] = v;
        }
    }
    let t0 = Instant::now();
    let vals = a.eigvalsh(UPLO::Lower).unwrap();
    println!("eigvalsh n={} took {:?}, lambda0={:.3}", n, t0.elapsed(), vals[0]);
    let t1 = Instant::now();
    let (vals2, vecs) = a.eigh(UPLO::Lower).unwrap();
    println!("eigh n={} took {:?}, lambda0={:.3} v00={:.3e}", n, t1.elapsed(), vals2[0], vecs[[0,0]]);
    let t2 = Instant::now();
    let b = vecs.dot(&vecs.t());
    println!("dgemm-equiv n={} took {:?} b00={:.3}", n, t2.elapsed(), b[[0,0]]);
}
