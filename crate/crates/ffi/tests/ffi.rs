use std::f64::consts::PI;
use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use bergman_dirichlet_ffi::*;

fn c(re: f64, im: f64) -> BdComplex {
    BdComplex { re, im }
}

fn last_error() -> String {
    let p = bd_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn disk_round_trip() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(bd_disk_space_new(1.0, 0.0, 0, &mut d), BdStatus::Ok);
        assert!(!d.is_null());

        let mut k = BdComplex::default();
        assert_eq!(
            bd_disk_kernel(d, c(0.5, 0.0), c(0.5, 0.0), false, &mut k),
            BdStatus::Ok
        );
        assert!((k.re - 16.0 / (9.0 * PI)).abs() < 1e-15);
        let mut ks = BdComplex::default();
        assert_eq!(
            bd_disk_kernel(d, c(0.5, 0.0), c(0.5, 0.0), true, &mut ks),
            BdStatus::Ok
        );
        assert!((ks.re - k.re).abs() < 1e-14);

        let mut v = 0.0;
        assert_eq!(bd_disk_monomial_norm_sq(d, 1, &mut v), BdStatus::Ok);
        assert!((v - PI / 2.0).abs() < 1e-15);

        let f = [c(1.0, 0.0), c(0.0, 1.0)];
        assert_eq!(
            bd_disk_norm_sq(d, f.as_ptr(), f.len(), &mut v),
            BdStatus::Ok
        );
        assert!((v - 1.5 * PI).abs() < 1e-14);

        let g = [c(0.0, 0.0), c(1.0, 0.0)];
        let mut ip = BdComplex::default();
        assert_eq!(
            bd_disk_inner_product(d, f.as_ptr(), 2, g.as_ptr(), 2, &mut ip),
            BdStatus::Ok
        );
        assert!((ip.im - PI / 2.0).abs() < 1e-15 && ip.re.abs() < 1e-15);

        assert_eq!(
            bd_disk_evaluation_bound(d, c(0.5, 0.0), &mut v),
            BdStatus::Ok
        );
        assert!((v - (16.0 / (9.0 * PI)).sqrt()).abs() < 1e-15);

        bd_disk_space_free(d);
    }
}

#[test]
fn plane_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(bd_plane_space_new(1.0, 0, &mut p), BdStatus::Ok);
        let mut k = BdComplex::default();
        assert_eq!(
            bd_plane_kernel(p, c(1.0, 0.0), c(1.0, 0.0), false, &mut k),
            BdStatus::Ok
        );
        assert!((k.re - std::f64::consts::E / PI).abs() < 1e-15);
        let mut v = 0.0;
        assert_eq!(bd_plane_monomial_norm_sq(p, 3, &mut v), BdStatus::Ok);
        assert!((v - 6.0 * PI).abs() < 1e-13);
        assert_eq!(bd_plane_norm_sq(p, ptr::null(), 0, &mut v), BdStatus::Ok);
        assert_eq!(v, 0.0);
        let f = [c(1.0, 0.0)];
        let mut ip = BdComplex::default();
        assert_eq!(
            bd_plane_inner_product(p, f.as_ptr(), 1, f.as_ptr(), 1, &mut ip),
            BdStatus::Ok
        );
        assert!((ip.re - PI).abs() < 1e-15);
        assert_eq!(
            bd_plane_evaluation_bound(p, c(0.0, 0.0), &mut v),
            BdStatus::Ok
        );
        assert!((v - (1.0 / PI).sqrt()).abs() < 1e-15);
        bd_plane_space_free(p);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(
            bd_disk_space_new(1.0, -1.0, 0, &mut d),
            BdStatus::InvalidParameter
        );
        assert!(last_error().contains("alpha"));
        assert!(d.is_null());
        assert_eq!(
            bd_disk_space_new(1.0, 0.0, 1, ptr::null_mut()),
            BdStatus::NullPointer
        );

        assert_eq!(bd_disk_space_new(1.0, 0.0, 1, &mut d), BdStatus::Ok);
        let mut k = BdComplex::default();
        assert_eq!(
            bd_disk_kernel(d, c(1.0, 0.0), c(0.0, 0.0), false, &mut k),
            BdStatus::Domain
        );
        assert_eq!(
            bd_disk_kernel(ptr::null(), c(0.0, 0.0), c(0.0, 0.0), false, &mut k),
            BdStatus::NullPointer
        );
        assert_eq!(
            bd_disk_norm_sq(d, ptr::null(), 3, &mut 0.0),
            BdStatus::NullPointer
        );
        let mut p = ptr::null_mut();
        assert_eq!(bd_plane_space_new(1.0, 0, &mut p), BdStatus::Ok);
        assert_eq!(
            bd_plane_monomial_norm_sq(p, 400, &mut 0.0),
            BdStatus::Overflow
        );
        assert!(last_error().contains("overflow"));
        bd_plane_space_free(p);
        let mut cst = 0.0;
        assert_eq!(bd_disk_embedding_constant(d, &mut cst), BdStatus::Ok);
        assert_eq!(cst, 0.0);
        bd_disk_space_free(d);
        bd_disk_space_free(ptr::null_mut());
    }
}

#[test]
fn hypergeometric_codes() {
    unsafe {
        let num = [1.0, 1.0];
        let den = [2.0];
        let mut out = BdComplex::default();
        assert_eq!(
            bd_hypergeometric(
                num.as_ptr(),
                2,
                den.as_ptr(),
                1,
                c(0.5, 0.0),
                1e-14,
                10_000,
                &mut out
            ),
            BdStatus::Ok
        );
        assert!((0.5 * out.re - 2f64.ln()).abs() <= 1e-14 * 2f64.ln());
        assert_eq!(
            bd_hypergeometric(
                num.as_ptr(),
                2,
                den.as_ptr(),
                1,
                c(1.0, 0.0),
                1e-14,
                10_000,
                &mut out
            ),
            BdStatus::Divergent
        );
        assert_eq!(
            bd_hypergeometric(
                num.as_ptr(),
                2,
                den.as_ptr(),
                1,
                c(0.99, 0.0),
                1e-14,
                5,
                &mut out
            ),
            BdStatus::NotConverged
        );
        assert_eq!(
            bd_hypergeometric(
                num.as_ptr(),
                2,
                [-1.0].as_ptr(),
                1,
                c(0.5, 0.0),
                1e-14,
                100,
                &mut out
            ),
            BdStatus::InvalidParameter
        );
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(bd_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn header_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/bergman_dirichlet.h")
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(header_path()).unwrap();
    let src = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs"))
        .unwrap();
    let exports: Vec<&str> = src
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|s| s.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 18);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    for ty in [
        "typedef struct BdDiskSpace BdDiskSpace;",
        "typedef struct BdPlaneSpace BdPlaneSpace;",
        "BD_STATUS_PANIC = 7",
    ] {
        assert!(header.contains(ty), "{ty}");
    }
}

/// Compiles a small C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libbergman_dirichlet_ffi.a");
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );

    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "bergman_dirichlet.h"
int main(void) {
    BdDiskSpace *d = NULL;
    if (bd_disk_space_new(1.0, 0.0, 0, &d) != BD_STATUS_OK) return 10;
    BdComplex z = {0.5, 0.0}, k;
    if (bd_disk_kernel(d, z, z, false, &k) != BD_STATUS_OK) return 11;
    printf("%.17g\n", k.re);
    BdComplex far = {2.0, 0.0};
    if (bd_disk_kernel(d, far, z, false, &k) != BD_STATUS_DOMAIN) return 12;
    printf("%s\n", bd_last_error_message());
    bd_disk_space_free(d);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("main");
    let status = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(header_path().parent().unwrap())
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let k: f64 = lines.next().unwrap().parse().unwrap();
    assert!((k - 16.0 / (9.0 * PI)).abs() < 1e-15);
    assert!(lines.next().unwrap().contains("not inside the disk"));
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|cc| {
            Command::new(cc)
                .arg("--version")
                .output()
                .is_ok_and(|o| o.status.success())
        })
        .ok_or(())
}
