#!/usr/bin/env python3
"""Generate the bundled insurance mini-corpus.

Usage: make_insurance_corpus.py <out-dir> [--chars N]

Five plain-text documents assembled from fixed sentence templates with a
seeded RNG, so the output is byte-identical on every run. The total length is
trimmed to stay at or below N characters (default 90000). Writes <id>.txt per
document plus manifest.tsv in the corpus layout the CLI reads.
"""
import argparse
import os
import random
import re

SEED = 20160414

# Sentences every build must contain, placed at the head of their document.
FIXED = {
    "premiums-and-idv": [
        "If you raise the IDV, the premium rises.",
        "IDV can make a whole lot of difference to the motor insurance premium.",
    ],
    "motor-insurance": [
        "A car is a vehicle.",
        "The driver damaged the car and the fence.",
    ],
    "claims-handling": [
        "An accident is an incident.",
        "The claim was approved by the insurer.",
    ],
    "home-insurance": [
        "A house is a building.",
        "The policy covers the building and the contents.",
    ],
    "policy-glossary": [
        "A policyholder is a person.",
        "A premium is a payment.",
    ],
}

POOLS = {
    "party": ["the insurer", "the policyholder", "the driver", "the customer", "the agent",
              "the broker", "the insured person", "the owner", "the company", "the underwriter"],
    "money": ["the premium", "the excess", "the deductible", "the claim amount", "the payment",
              "the compensation", "the renewal premium", "the annual premium", "the fee"],
    "thing": ["the vehicle", "the car", "the motorcycle", "the house", "the building",
              "the contents", "the property", "the engine", "the windscreen", "the garage"],
    "doc": ["the policy", "the contract", "the certificate", "the proposal form",
            "the schedule", "the claim form", "the endorsement", "the renewal notice"],
    "event": ["the accident", "the incident", "the theft", "the fire", "the flood",
              "the collision", "the damage", "the loss", "the breakdown"],
    "cover": ["third party cover", "comprehensive cover", "fire cover", "theft cover",
              "liability cover", "accident cover", "flood cover"],
    "adj": ["high", "low", "expensive", "cheap", "valid", "comprehensive", "mandatory",
            "optional", "responsible", "liable"],
}

TEMPLATES = {
    "premiums-and-idv": [
        "The IDV of {thing} depends on the age of {thing}.",
        "{party^} calculates {money} from the IDV and the risk.",
        "A higher IDV increases {money} of the policy.",
        "A lower IDV reduces {money} but limits the compensation.",
        "{party^} pays {money} every year.",
        "{money^} depends on the value of {thing}.",
        "{party^} determines the IDV at the start of the policy.",
        "{party^} can reduce {money} by choosing a voluntary excess.",
        "{money^} is {adj} for a new vehicle.",
        "{party^} offers a discount on {money}.",
        "The no claim bonus reduces {money} of the policyholder.",
        "{party^} should compare {money} before the renewal.",
        "{party^} charges {money} for {cover}.",
        "The depreciation of the vehicle reduces the IDV.",
        "{party^} receives a renewal notice before the expiry of the policy.",
        "{party^} must pay {money} before the start date.",
        "The insured declared value is the market value of the vehicle.",
        "{party^} will include the accessories in the IDV.",
        "{money^} rises when the risk increases.",
        "{party^} explains the premium to {party}.",
    ],
    "motor-insurance": [
        "{party^} drives {thing} to work.",
        "The motor insurance policy covers {event} of {thing}.",
        "{party^} insures {thing} against {event}.",
        "{cover^} protects the driver against the claims of a third party.",
        "{party^} buys {cover} for the car.",
        "{party^} can choose {cover} or {cover}.",
        "{event^} damaged {thing} and the garage.",
        "{party^} repaired {thing} after {event}.",
        "{party^} must inform {party} about {event}.",
        "The driving licence of the driver is mandatory.",
        "{cover^} includes the repair of {thing}.",
        "{party^} replaces {thing} after the theft.",
        "A motorcycle is a vehicle.",
        "A truck is a vehicle.",
        "{party^} uses {thing} for business.",
        "{party^} reports {event} to the police.",
        "{party^} will pay for the repair of the vehicle.",
        "The vehicle is insured by the insurer.",
        "{party^} owns {thing} and {thing}.",
        "{event^} caused {event} on the road.",
    ],
    "claims-handling": [
        "{party^} files a claim after {event}.",
        "{party^} submits {doc} with the claim.",
        "{party^} assesses the damage to {thing}.",
        "{party^} settles the claim within a month.",
        "{party^} rejects the claim for {event}.",
        "{party^} approves the claim and pays the compensation.",
        "The claim is assessed by the surveyor.",
        "{party^} reimburses {money} to {party}.",
        "{party^} verifies {doc} of the policyholder.",
        "The surveyor estimates the cost of the repair.",
        "{party^} must notify {party} within a week.",
        "{event^} is covered by {cover}.",
        "{party^} pays {money} and the insurer pays the rest.",
        "The claim was settled by the insurer.",
        "{party^} contacts the claims office after {event}.",
        "The claims office receives {doc} from {party}.",
        "{party^} can accept the offer of the insurer.",
        "A surveyor is a person.",
        "{party^} keeps a copy of {doc}.",
        "The settlement of the claim depends on {doc}.",
    ],
    "home-insurance": [
        "{party^} insures the house against {event}.",
        "The home insurance policy protects {thing} and the contents.",
        "{cover^} includes {event} and {event}.",
        "{event^} damaged the building and the contents.",
        "{party^} provides cover for the contents of the house.",
        "{party^} excludes the damage caused by a flood.",
        "{party^} must protect the property against theft.",
        "{party^} extends {cover} to the garage.",
        "A flat is a building.",
        "{party^} calculates the cost of the rebuilding.",
        "{party^} renews {doc} every year.",
        "{party^} cancels {doc} after the sale of the house.",
        "The contents are covered by the policy.",
        "{party^} lists the valuables in {doc}.",
        "{party^} can increase {money} of the policy.",
        "{event^} is excluded by {doc}.",
        "{party^} sells the house to {party}.",
        "The landlord insures the building.",
        "{party^} requires an inspection of the property.",
        "{money^} is {adj} for an old building.",
    ],
    "policy-glossary": [
        "{doc^} is a contract between the insurer and the policyholder.",
        "The excess is the amount the policyholder pays for each claim.",
        "The insurer is a company.",
        "{party^} signs {doc} at the start of the cover.",
        "{doc^} defines the terms of the insurance.",
        "{party^} reads {doc} before the purchase.",
        "The policy term is the period of the insurance.",
        "{party^} receives {doc} after the payment.",
        "{doc^} lists the exclusions of the policy.",
        "The excess applies to every incident.",
        "Someone who buys the policy is the policyholder.",
        "{party^} knows the terms of {doc}.",
        "A broker is a person.",
        "An underwriter is a person.",
        "{party^} explains {doc} to {party}.",
        "{cover^} is {adj} in many countries.",
        "{party^} offers {cover} to {party}.",
        "The liability of the insurer is limited by the policy.",
        "{party^} needs {cover} for {thing}.",
        "A deductible is an excess.",
    ],
}

DOC_ORDER = ["premiums-and-idv", "motor-insurance", "claims-handling",
             "home-insurance", "policy-glossary"]


def fill(template, rng):
    def sub(m):
        key = m.group(1)
        cap = m.group(2) == "^"
        value = rng.choice(POOLS[key])
        return value[0].upper() + value[1:] if cap else value
    out = re.sub(r"\{(\w+)(\^?)\}", sub, template)
    return out[0].upper() + out[1:]


def paragraphs(name, rng, target):
    sentences = list(FIXED[name])
    size = sum(len(s) + 1 for s in sentences)
    while size < target:
        s = fill(rng.choice(TEMPLATES[name]), rng)
        sentences.append(s)
        size += len(s) + 1
    paras, i = [], 0
    while i < len(sentences):
        n = rng.randint(4, 8)
        paras.append(" ".join(sentences[i:i + n]))
        i += n
    return paras


def tokens(text):
    n = 0
    for word in text.split():
        core = word.strip(".,;:!?\"'()")
        lead = len(word) - len(word.lstrip(".,;:!?\"'("))
        trail = len(word) - len(word.rstrip(".,;:!?\"')"))
        n += lead + trail + (1 if core else 0)
    return n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--chars", type=int, default=90000)
    args = ap.parse_args()
    rng = random.Random(SEED)
    per_doc = args.chars // len(DOC_ORDER)
    os.makedirs(args.out, exist_ok=True)
    manifest = []
    total = 0
    for name in DOC_ORDER:
        body = "\n".join(paragraphs(name, rng, per_doc - 200))
        while len(body) > per_doc:
            body = body[:body.rfind("\n")]
        with open(os.path.join(args.out, name + ".txt"), "w", encoding="utf-8") as f:
            f.write(body)
        total += len(body)
        manifest.append(f"{name}\t{name}.txt\t{len(body)}\t{tokens(body)}")
    with open(os.path.join(args.out, "manifest.tsv"), "w", encoding="utf-8") as f:
        f.write("\n".join(manifest) + "\n")
    print(f"{len(DOC_ORDER)} documents, {total} characters")


if __name__ == "__main__":
    main()
