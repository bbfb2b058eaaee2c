use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use lie_poisson_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { lp_string_free(p) };
    s
}

fn algebra(name: &str) -> *mut LpAlgebra {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { lp_algebra_classical(name.as_ptr(), &mut g) }, LpStatus::Ok);
    g
}

#[test]
fn algebra_numbers() {
    let g = algebra("sl3");
    unsafe {
        assert_eq!(lp_algebra_dim(g), 8);
        let mut index = 0;
        assert_eq!(lp_algebra_index(g, 5, 0, 10, &mut index), LpStatus::Ok);
        assert_eq!(index, 2);
        let mut b = 0;
        assert_eq!(lp_algebra_b(g, index, &mut b), LpStatus::Ok);
        assert_eq!(b, 5);
        assert_eq!(lp_algebra_b(g, 1, &mut b), LpStatus::Internal);
        lp_algebra_free(g);
    }
}

#[test]
fn verdicts_through_handles() {
    for (name, split_cartan, expected) in [
        ("gl4", false, LpVerdict::NotCommutative),
        ("gl3", false, LpVerdict::Commutative),
        ("sl3", true, LpVerdict::Commutative),
    ] {
        let g = algebra(name);
        unsafe {
            let mut split = ptr::null_mut();
            let st = if split_cartan { lp_splitting_cartan(g, &mut split) } else { lp_splitting_lower_right_sl2(g, &mut split) };
            assert_eq!(st, LpStatus::Ok);
            let mut inv = ptr::null_mut();
            assert_eq!(lp_invariants_trace_powers(g, &mut inv), LpStatus::Ok);
            let mut v = LpVerdict::Undecided;
            assert_eq!(lp_criterion_verdict(inv, split, 1_000_000, 0, &mut v), LpStatus::Ok);
            assert_eq!(v, expected, "{name} criterion");
            let mut z = ptr::null_mut();
            assert_eq!(lp_subalgebra_z(inv, split, 1_000_000, &mut z), LpStatus::Ok);
            assert_eq!(lp_subalgebra_pair_report(z, 1_000_000, 0, &mut v), LpStatus::Ok);
            assert_eq!(v, expected, "{name} pairs");
            if split_cartan {
                let mut zt = ptr::null_mut();
                assert_eq!(lp_subalgebra_ztilde(inv, split, &mut zt), LpStatus::Ok);
                assert_eq!(lp_subalgebra_len(zt), 5);
                lp_subalgebra_free(zt);
            } else {
                let mut zt = ptr::null_mut();
                assert_eq!(lp_subalgebra_ztilde(inv, split, &mut zt), LpStatus::Unsupported);
                assert!(zt.is_null());
            }
            lp_subalgebra_free(z);
            lp_invariants_free(inv);
            lp_splitting_free(split);
            lp_algebra_free(g);
        }
    }
}

#[test]
fn invariant_text_and_brackets() {
    let g = algebra("sl2");
    unsafe {
        let mut inv = ptr::null_mut();
        assert_eq!(lp_invariants_trace_powers(g, &mut inv), LpStatus::Ok);
        assert_eq!(lp_invariants_len(inv), 1);
        let mut s = ptr::null_mut();
        assert_eq!(lp_invariants_get_poly_text(inv, 0, &mut s), LpStatus::Ok);
        let text = take_string(s);
        assert_eq!(lp_invariants_get_poly_text(inv, 1, &mut s), LpStatus::InvalidArgument);

        // the invariant Poisson-commutes with the coordinate functions
        let c = CString::new(text).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(lp_poly_parse(c.as_ptr(), 3, &mut h), LpStatus::Ok);
        let x1 = CString::new("x[1]").unwrap();
        let x2 = CString::new("x[2]").unwrap();
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(lp_poly_parse(x1.as_ptr(), 3, &mut a), LpStatus::Ok);
        assert_eq!(lp_poly_parse(x2.as_ptr(), 3, &mut b), LpStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(lp_poly_bracket(g, h, a, 1000, &mut out), LpStatus::Ok);
        assert_eq!(lp_poly_to_string(out, &mut s), LpStatus::Ok);
        assert_eq!(take_string(s), "0");
        lp_poly_free(out);
        // {E12, E21} = h1
        assert_eq!(lp_poly_bracket(g, a, b, 1000, &mut out), LpStatus::Ok);
        assert_eq!(lp_poly_to_string(out, &mut s), LpStatus::Ok);
        assert_eq!(take_string(s), "x[0]");
        for p in [out, h, a, b] {
            lp_poly_free(p);
        }
        lp_invariants_free(inv);
        lp_algebra_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(lp_algebra_classical(ptr::null(), &mut g), LpStatus::NullPointer);
        let msg = take_string(lp_last_error_message());
        assert!(msg.contains("null"), "{msg}");
        let bad = CString::new("so5").unwrap();
        assert_eq!(lp_algebra_classical(bad.as_ptr(), &mut g), LpStatus::InvalidArgument);
        let path = CString::new("/nonexistent/file").unwrap();
        assert_eq!(lp_algebra_from_structure_file(path.as_ptr(), &mut g), LpStatus::Parse);
        let text = CString::new("x[0] +").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(lp_poly_parse(text.as_ptr(), 1, &mut p), LpStatus::Parse);
        assert!(p.is_null());
        assert_eq!(lp_algebra_dim(ptr::null()), 0);
        lp_algebra_free(ptr::null_mut());
        lp_string_free(ptr::null_mut());

        // success clears the message
        let g = algebra("gl2");
        assert!(lp_last_error_message().is_null());
        // invariants and splitting over different algebras
        let h = algebra("gl3");
        let (mut inv, mut split) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(lp_invariants_trace_powers(g, &mut inv), LpStatus::Ok);
        assert_eq!(lp_splitting_cartan(h, &mut split), LpStatus::Ok);
        let mut v = LpVerdict::Undecided;
        assert_eq!(lp_criterion_verdict(inv, split, 1000, 0, &mut v), LpStatus::InvalidDimension);
        lp_invariants_free(inv);
        lp_splitting_free(split);
        lp_algebra_free(g);
        lp_algebra_free(h);
    }
}

#[test]
fn structure_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.txt");
    std::fs::write(&path, "dim 3\n1 2 2 2\n1 3 3 -2\n2 3 1 1\n").unwrap();
    let c = CString::new(path.to_str().unwrap()).unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(lp_algebra_from_structure_file(c.as_ptr(), &mut g), LpStatus::Ok);
        assert_eq!(lp_algebra_dim(g), 3);
        let mut index = 0;
        assert_eq!(lp_algebra_index(g, 5, 0, 10, &mut index), LpStatus::Ok);
        assert_eq!(index, 1);
        lp_algebra_free(g);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/lie_poisson.h")).unwrap();
    for name in [
        "lp_algebra_classical",
        "lp_algebra_from_structure_file",
        "lp_algebra_index",
        "lp_splitting_cartan",
        "lp_splitting_lower_right_sl2",
        "lp_invariants_trace_powers",
        "lp_subalgebra_z",
        "lp_subalgebra_pair_report",
        "lp_criterion_verdict",
        "lp_poly_bracket",
        "lp_last_error_message",
        "typedef struct LpAlgebra LpAlgebra",
        "LP_STATUS_CAP_EXCEEDED = 8",
        "LP_VERDICT_NOT_COMMUTATIVE = 2",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compile and run a small C program against the header and the static library.
#[test]
fn c_program_links() {
    let exe = std::env::current_exe().unwrap();
    let target_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = target_dir.join("liblie_poisson_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "lie_poisson.h"
int main(void) {
    LpAlgebra *g = NULL; LpSplitting *s = NULL; LpInvariants *inv = NULL;
    if (lp_algebra_classical("gl4", &g) != LP_STATUS_OK) return 10;
    if (lp_splitting_lower_right_sl2(g, &s) != LP_STATUS_OK) return 11;
    if (lp_invariants_trace_powers(g, &inv) != LP_STATUS_OK) return 12;
    LpVerdict v;
    if (lp_criterion_verdict(inv, s, 1000000, 0, &v) != LP_STATUS_OK) return 13;
    printf("%d\n", (int)v);
    lp_invariants_free(inv); lp_splitting_free(s); lp_algebra_free(g);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("smoke");
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "C program exited with {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
}
