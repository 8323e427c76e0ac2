#!/usr/bin/env python3
# Copyright 2026 The adaptvqe Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the integral fixtures under fixtures/.

Requires PySCF. Not part of the library; the generated files are checked in.

    python3 tools/gen_fixtures.py [--out fixtures] [--only name ...]
"""
import argparse
import json
import os

import numpy as np
from pyscf import ao2mo, fci, gto, mcscf, scf, symm
from pyscf.tools import fcidump

ANGSTROM_TO_BOHR = 1.0 / 0.52917721092


def chain(n, spacing):
    return [("H", (0.0, 0.0, i * spacing)) for i in range(n)]


def water(r_oh, angle_deg):
    half = np.deg2rad(angle_deg) / 2.0
    return [
        ("O", (0.0, 0.0, 0.0)),
        ("H", (0.0, r_oh * np.sin(half), r_oh * np.cos(half))),
        ("H", (0.0, -r_oh * np.sin(half), r_oh * np.cos(half))),
    ]


def run_rhf(atoms, basis, symmetry):
    mol = gto.M(atom=atoms, basis=basis, unit="Angstrom", verbose=0,
                symmetry=symmetry)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.conv_tol_grad = 1e-10
    mf.kernel()
    # Walk out of saddle points so the reference is the lowest RHF solution.
    for _ in range(4):
        try:
            mo, _, stable, _ = mf.stability(return_status=True)
        except Exception:
            # Davidson has nothing to do for tiny spaces with symmetry.
            break
        if stable:
            break
        dm = mf.make_rdm1(mo, mf.mo_occ)
        mf.kernel(dm)
    assert mf.converged
    return mol, mf


def canonicalize(mf, mo):
    """Rediagonalize the Fock matrix inside the occupied and virtual blocks."""
    fock_ao = mf.get_fock()
    occ = mf.mo_occ > 0
    out = mo.copy()
    energies = np.zeros(mo.shape[1])
    for block in (occ, ~occ):
        c = mo[:, block]
        f = c.T @ fock_ao @ c
        e, u = np.linalg.eigh(f)
        out[:, block] = c @ u
        energies[block] = e
    return out, energies


def molpro_orbsym(mol, mo):
    if not mol.symmetry:
        return None
    ids = symm.label_orb_symm(mol, mol.irrep_id, mol.symm_orb, mo)
    table = fcidump.ORBSYM_MAP[mol.groupname]
    return [table[i] for i in ids]


def write_provenance(path, lines):
    with open(os.path.join(path, "provenance.md"), "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_constants(path, data):
    with open(os.path.join(path, "constants.json"), "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def full_space_fixture(out, name, atoms, basis, description, symmetry):
    mol, mf = run_rhf(atoms, basis, symmetry)
    mo, _ = canonicalize(mf, mf.mo_coeff)
    norb = mo.shape[1]
    h1 = mo.T @ mf.get_hcore() @ mo
    eri = ao2mo.restore(8, ao2mo.kernel(mol, mo), norb)
    nelec = mol.nelectron
    e_fci, civec = fci.direct_spin1.kernel(h1, eri, norb, nelec,
                                           ecore=mol.energy_nuc(),
                                           conv_tol=1e-12, max_cycle=500)
    path = os.path.join(out, name)
    os.makedirs(path, exist_ok=True)
    fcidump.from_integrals(os.path.join(path, "FCIDUMP"), h1, eri, norb,
                           nelec, nuc=mol.energy_nuc(),
                           orbsym=molpro_orbsym(mol, mo))
    write_constants(path, {
        "n_orbitals": norb,
        "n_alpha": nelec // 2,
        "n_beta": nelec // 2,
        "hf_energy": float(mf.e_tot),
        "fci_energy": float(e_fci),
        "hf_fidelity": float(civec[0, 0] ** 2),
    })
    write_provenance(path, [
        f"# {name}",
        "",
        description,
        "",
        f"- basis: {basis}",
        f"- geometry (Angstrom): {atoms}",
        "- orbitals: canonical RHF, all orbitals active",
        f"- generator: tools/gen_fixtures.py, PySCF RHF (conv_tol 1e-12) + FCI",
    ])


def cas_fixture(out, name, atoms, basis, ncas, nelecas, description,
                symmetry, dipoles=False, ncore=None):
    mol, mf = run_rhf(atoms, basis, symmetry)
    mo, _ = canonicalize(mf, mf.mo_coeff)
    mc = mcscf.CASCI(mf, ncas, nelecas)
    if ncore is not None:
        mc.ncore = ncore
    mc.mo_coeff = mo
    h1, ecore = mc.get_h1eff(mo)
    eri = ao2mo.restore(8, mc.get_h2eff(mo), ncas)
    nel = nelecas if isinstance(nelecas, int) else sum(nelecas)
    e_fci, civec = fci.direct_spin1.kernel(h1, eri, ncas, nel, ecore=ecore,
                                           conv_tol=1e-12, max_cycle=500)
    act = mo[:, mc.ncore:mc.ncore + ncas]
    path = os.path.join(out, name)
    os.makedirs(path, exist_ok=True)
    fcidump.from_integrals(os.path.join(path, "FCIDUMP"), h1, eri, ncas, nel,
                           nuc=ecore, orbsym=molpro_orbsym(mol, act))
    constants = {
        "n_orbitals": ncas,
        "n_alpha": nel // 2,
        "n_beta": nel // 2,
        "hf_energy": float(mf.e_tot),
        "fci_energy": float(e_fci),
        "hf_fidelity": float(civec[0, 0] ** 2),
    }
    notes = [
        f"# {name}",
        "",
        description,
        "",
        f"- basis: {basis}",
        f"- geometry (Angstrom): {atoms}",
        f"- active space: {nel} electrons in {ncas} canonical RHF orbitals,"
        f" {mc.ncore} doubly occupied orbitals folded into the core energy",
        "- generator: tools/gen_fixtures.py, PySCF RHF (conv_tol 1e-12) +"
        " CASCI effective integrals + FCI in the active space",
    ]
    if dipoles:
        r_ao = mol.intor("int1e_r")
        r_mo = np.einsum("pi,xpq,qj->xij", act, r_ao, act)
        core = mo[:, :mc.ncore]
        core_el = 2.0 * np.einsum("pi,xpq,qi->x", core, r_ao, core)
        charges = mol.atom_charges()
        nuclear = np.einsum("a,ax->x", charges, mol.atom_coords()) - core_el
        with open(os.path.join(path, "DIPOLES"), "w") as fh:
            fh.write(f"&DIPOLES NORB={ncas} /\n")
            for c, label in enumerate("XYZ"):
                fh.write(f"# DIPOLE {label}\n")
                for i in range(ncas):
                    for j in range(i + 1):
                        v = r_mo[c, i, j]
                        if abs(v) > 1e-15:
                            fh.write(f" {v:.16e} {i + 1} {j + 1} 0 0\n")
            fh.write("# NUCLEAR {:.16e} {:.16e} {:.16e}\n".format(*nuclear))
        dm1 = fci.direct_spin1.make_rdm1(civec, ncas, nel)
        mu_fci = nuclear - np.einsum("xpq,pq->x", r_mo, dm1)
        constants["fci_dipole"] = [float(v) for v in mu_fci]
        constants["nuclear_dipole"] = [float(v) for v in nuclear]
        notes.append("- DIPOLES: position integrals <p|r|q> (Bohr, origin at"
                     " (0,0,0)) over the active orbitals; the NUCLEAR trailer"
                     " includes the electronic dipole of the folded core so"
                     " that mu = NUCLEAR - sum_pq r_pq D_pq for the model")
    write_constants(path, constants)
    write_provenance(path, notes)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "fixtures"))
    ap.add_argument("--only", nargs="*")
    args = ap.parse_args()

    jobs = {}
    for r in (0.50, 0.74, 1.50):
        name = f"h2_{r:.2f}"
        jobs[name] = lambda r=r, name=name: full_space_fixture(
            args.out, name, [("H", (0, 0, 0)), ("H", (0, 0, r))], "sto-3g",
            f"H2 at {r:.2f} Angstrom.", "D2h")
    jobs["h4_chain_1.50"] = lambda: full_space_fixture(
        args.out, "h4_chain_1.50", chain(4, 1.5), "sto-3g",
        "Linear H4 chain with 1.5 Angstrom spacing.", "D2h")
    jobs["h6_chain_2.00"] = lambda: full_space_fixture(
        args.out, "h6_chain_2.00", chain(6, 2.0), "sto-3g",
        "Linear H6 chain with 2.0 Angstrom spacing.", "D2h")
    for r in (1.098, 1.8, 2.5):
        name = f"n2_cas66_{r:.3f}"
        jobs[name] = lambda r=r, name=name: cas_fixture(
            args.out, name, [("N", (0, 0, 0)), ("N", (0, 0, r))], "sto-3g",
            6, 6, f"N2 at {r:.3f} Angstrom, CAS(6,6) over the valence"
            " 2p-derived orbitals.", "D2h")
    jobs["water3"] = lambda: cas_fixture(
        args.out, "water3", water(1.5, 104.5), "sto-3g", 3, 4,
        "Water-like model: H2O at R(OH) = 1.5 Angstrom, 104.5 degrees,"
        " reduced to 4 electrons in 3 orbitals.", False, dipoles=True)

    for name, job in jobs.items():
        if args.only and name not in args.only:
            continue
        job()
        print("wrote", name)


if __name__ == "__main__":
    main()
