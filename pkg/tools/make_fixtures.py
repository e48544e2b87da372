#!/usr/bin/env python3
"""Regenerate the bundled fixtures deterministically.

Produces, from one table of ontology definitions:
  fixtures/toy/          two 6-class ontologies + reference + embedding files
  fixtures/conference/   seven conference-domain ontologies, 21 pairwise
                         reference alignments, per-ontology embedding files
  corpus_prep/tests/fixtures/   the same ontologies as OWL (RDF/XML), one
                         Turtle duplicate, and Alignment-format references

Embedding files use the library's deterministic hash backend (seed 0) over
the token bags of each ontology, so the corpus-prep `embed --encoder hash`
command reproduces them byte for byte.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import json
import sys
from itertools import combinations
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ontogat.embeddings import hash_vector, write_embeddings  # noqa: E402
from ontogat.preprocessing import bag_of_words, load_abbreviations, load_stopwords  # noqa: E402

CONFERENCE_DIM = 128
TOY_DIM = 32

# ----------------------------------------------------------------------
# Ontology definitions.
# classes: name -> {"parents": [...], "equivalents": [...], "restrictions": [obj prop names]}
# object_properties / datatype_properties: name -> (domain class, range class or None)
# concepts: concept key -> entity name (drives the pairwise reference alignments)
# ----------------------------------------------------------------------

CONFERENCE_ONTOLOGIES = {
    "cmt": {
        "iri": "http://cmt",
        "classes": {
            "Person": {},
            "User": {"parents": ["Person"]},
            "Author": {"parents": ["User"], "restrictions": ["writePaper"]},
            "CoAuthor": {"parents": ["Author"]},
            "Reviewer": {"parents": ["User"], "restrictions": ["writeReview"]},
            "MetaReviewer": {"parents": ["Reviewer"]},
            "ProgramCommitteeMember": {"parents": ["Person"]},
            "ProgramCommitteeChair": {"parents": ["ProgramCommitteeMember"]},
            "ProgramCommittee": {},
            "Administrator": {"parents": ["User"]},
            "Chairman": {"parents": ["Person"]},
            "Document": {},
            "Paper": {"parents": ["Document"]},
            "PaperAbstract": {"parents": ["Paper"]},
            "PaperFullVersion": {"parents": ["Paper"]},
            "Review": {"parents": ["Document"]},
            "Decision": {},
            "Acceptance": {"parents": ["Decision"]},
            "Rejection": {"parents": ["Decision"]},
            "Conference": {},
            "Bid": {},
            "SubjectArea": {},
        },
        "object_properties": {
            "writePaper": ("Author", "Paper"),
            "submitPaper": ("Author", "Paper"),
            "readPaper": ("Reviewer", "Paper"),
            "writeReview": ("Reviewer", "Review"),
            "hasDecision": ("Paper", "Decision"),
            "hasSubjectArea": ("Paper", "SubjectArea"),
            "hasBid": ("Paper", "Bid"),
            "acceptPaper": ("Administrator", "Paper"),
            "assignReviewer": ("Administrator", "Reviewer"),
        },
        "datatype_properties": {
            "name": "Person",
            "email": "Person",
            "title": "Paper",
            "paperID": "Paper",
        },
        "concepts": {
            "person": "Person",
            "author": "Author",
            "reviewer": "Reviewer",
            "pc_member": "ProgramCommitteeMember",
            "pc_chair": "ProgramCommitteeChair",
            "pc_committee": "ProgramCommittee",
            "chair": "Chairman",
            "document": "Document",
            "paper": "Paper",
            "abstract": "PaperAbstract",
            "review": "Review",
            "conference": "Conference",
            "topic": "SubjectArea",
            "p_write": "writePaper",
            "p_submit": "submitPaper",
            "p_review_doc": "writeReview",
            "p_name": "name",
            "p_email": "email",
            "p_title": "title",
        },
    },
    "conference": {
        "iri": "http://conference",
        "classes": {
            "Person": {},
            "Conference_participant": {"parents": ["Person"]},
            "Regular_author": {"parents": ["Conference_participant"]},
            "Committee_member": {"parents": ["Conference_participant"]},
            "Chair": {"parents": ["Committee_member"], "restrictions": ["belongs_to_committee"]},
            "Co_chair": {"parents": ["Committee_member"]},
            "Reviewer": {"parents": ["Person"]},
            "Invited_speaker": {"parents": ["Conference_participant"]},
            "Conference_document": {},
            "Conference_contribution": {"parents": ["Conference_document"]},
            "Paper": {"parents": ["Conference_contribution"]},
            "Abstract": {"parents": ["Conference_contribution"]},
            "Extended_abstract": {"parents": ["Paper"]},
            "Poster": {"parents": ["Conference_contribution"]},
            "Review": {"parents": ["Conference_document"]},
            "Committee": {},
            "Program_committee": {"parents": ["Committee"]},
            "Organizing_committee": {"parents": ["Committee"]},
            "Steering_committee": {"parents": ["Committee"]},
            "Conference_proceedings": {"parents": ["Conference_document"]},
            "Conference_volume": {},
            "Conference_fees": {},
            "Conference_www": {"equivalents": ["Conference_web_site"]},
            "Conference_web_site": {},
            "Topic": {},
        },
        "object_properties": {
            "has_authors": ("Conference_contribution", "Person"),
            "has_a_review": ("Paper", "Review"),
            "belongs_to_committee": ("Committee_member", "Committee"),
            "has_members": ("Committee", "Person"),
            "has_a_topic": ("Conference_contribution", "Topic"),
            "has_a_www": ("Conference_volume", "Conference_www"),
            "has_contributions": ("Conference_volume", "Conference_contribution"),
        },
        "datatype_properties": {
            "has_a_name": "Person",
            "has_an_email": "Person",
            "has_a_title": "Conference_document",
            "has_a_date": "Conference_volume",
        },
        "concepts": {
            "person": "Person",
            "participant": "Conference_participant",
            "author": "Regular_author",
            "reviewer": "Reviewer",
            "pc_member": "Committee_member",
            "chair": "Chair",
            "pc_committee": "Program_committee",
            "sc_committee": "Steering_committee",
            "oc_committee": "Organizing_committee",
            "document": "Conference_document",
            "paper": "Paper",
            "abstract": "Abstract",
            "poster": "Poster",
            "review": "Review",
            "conference": "Conference_volume",
            "website": "Conference_www",
            "topic": "Topic",
            "speaker": "Invited_speaker",
            "proceedings": "Conference_proceedings",
            "p_has_review": "has_a_review",
            "p_member_of": "belongs_to_committee",
            "p_topic": "has_a_topic",
            "p_name": "has_a_name",
            "p_email": "has_an_email",
            "p_title": "has_a_title",
        },
    },
    "confOf": {
        "iri": "http://confOf",
        "classes": {
            "Event": {},
            "Working_event": {"parents": ["Event"]},
            "Social_event": {"parents": ["Event"]},
            "Conference": {"parents": ["Working_event"]},
            "Workshop": {"parents": ["Working_event"]},
            "Banquet": {"parents": ["Social_event"]},
            "Trip": {"parents": ["Social_event"]},
            "Person": {},
            "Scholar": {"parents": ["Person"]},
            "Participant": {"parents": ["Person"]},
            "Member": {"parents": ["Participant"]},
            "Member_PC": {"parents": ["Member"], "restrictions": ["reviewes"]},
            "Chair_PC": {"parents": ["Member_PC"]},
            "Author": {"parents": ["Participant"], "restrictions": ["writes"]},
            "Contribution": {},
            "Paper": {"parents": ["Contribution"]},
            "Short_paper": {"parents": ["Contribution"]},
            "Poster": {"parents": ["Contribution"]},
            "Conference_dinner": {"parents": ["Social_event"]},
            "Topic": {},
            "University": {},
            "Organization": {},
            "Sponsor": {"parents": ["Organization"]},
        },
        "object_properties": {
            "writes": ("Author", "Contribution"),
            "reviewes": ("Member_PC", "Contribution"),
            "dealsWith": ("Contribution", "Topic"),
            "employedBy": ("Person", "Organization"),
            "attends": ("Participant", "Event"),
            "organizedBy": ("Conference", "Organization"),
        },
        "datatype_properties": {
            "hasFirstName": "Person",
            "hasSurname": "Person",
            "hasTitle": "Contribution",
        },
        "concepts": {
            "person": "Person",
            "participant": "Participant",
            "author": "Author",
            "academic": "Scholar",
            "pc_member": "Member_PC",
            "pc_chair": "Chair_PC",
            "paper": "Paper",
            "poster": "Poster",
            "conference": "Conference",
            "workshop": "Workshop",
            "event": "Event",
            "working_event": "Working_event",
            "social_event": "Social_event",
            "topic": "Topic",
            "organization": "Organization",
            "sponsor": "Sponsor",
            "p_write": "writes",
            "p_review": "reviewes",
            "p_topic": "dealsWith",
            "p_title": "hasTitle",
        },
    },
    "edas": {
        "iri": "http://edas",
        "classes": {
            "Person": {},
            "Attendee": {"parents": ["Person"]},
            "Author": {"parents": ["Person"]},
            "Referee": {"parents": ["Person"]},
            "ConferenceChair": {"parents": ["Person"]},
            "SessionChair": {"parents": ["Person"]},
            "ProgramCommitteeMember": {"parents": ["Person"]},
            "ProgramCommittee": {},
            "Conference": {},
            "ConferenceEvent": {},
            "ConferenceSession": {"parents": ["ConferenceEvent"]},
            "TalkEvent": {"parents": ["ConferenceEvent"]},
            "Document": {},
            "Manuscript": {"parents": ["Document"]},
            "AcceptedManuscript": {"parents": ["Manuscript"], "restrictions": ["isReviewedBy"]},
            "RejectedManuscript": {"parents": ["Manuscript"]},
            "Review": {"parents": ["Document"]},
            "PaperSession": {"parents": ["ConferenceSession"]},
            "Place": {},
            "TopicArea": {},
        },
        "object_properties": {
            "isWrittenBy": ("Manuscript", "Author"),
            "isReviewedBy": ("Manuscript", "Referee"),
            "relatesTo": ("Manuscript", "TopicArea"),
            "isMemberOf": ("ProgramCommitteeMember", "ProgramCommittee"),
            "hasMember": ("ProgramCommittee", "Person"),
            "takesPlaceAt": ("Conference", "Place"),
            "isChairedBy": ("ConferenceSession", "SessionChair"),
            "attends": ("Attendee", "ConferenceEvent"),
        },
        "datatype_properties": {
            "hasName": "Person",
            "hasEmail": "Person",
            "manuscriptTitle": "Manuscript",
            "startDate": "ConferenceEvent",
        },
        "concepts": {
            "person": "Person",
            "participant": "Attendee",
            "author": "Author",
            "reviewer": "Referee",
            "pc_member": "ProgramCommitteeMember",
            "pc_committee": "ProgramCommittee",
            "chair": "ConferenceChair",
            "session_chair": "SessionChair",
            "document": "Document",
            "paper": "Manuscript",
            "accepted_paper": "AcceptedManuscript",
            "review": "Review",
            "conference": "Conference",
            "session": "ConferenceSession",
            "talk": "TalkEvent",
            "place": "Place",
            "topic": "TopicArea",
            "p_reviewed_by": "isReviewedBy",
            "p_member_of": "isMemberOf",
            "p_topic": "relatesTo",
            "p_name": "hasName",
            "p_title": "manuscriptTitle",
        },
    },
    "ekaw": {
        "iri": "http://ekaw",
        "classes": {
            "Person": {},
            "Student": {"parents": ["Person"]},
            "Academic": {"parents": ["Person"]},
            "Conference_Participant": {"parents": ["Person"]},
            "Paper_Author": {"parents": ["Conference_Participant"], "restrictions": ["writtenBy"]},
            "Possible_Reviewer": {"parents": ["Person"]},
            "PC_Member": {"parents": ["Possible_Reviewer"]},
            "PC_Chair": {"parents": ["PC_Member"]},
            "Event": {},
            "Scientific_Event": {"parents": ["Event"]},
            "Conference": {"parents": ["Scientific_Event"]},
            "Workshop": {"parents": ["Scientific_Event"]},
            "Session": {"parents": ["Event"]},
            "Document": {},
            "Paper": {"parents": ["Document"]},
            "Abstract": {"parents": ["Document"]},
            "Submitted_Paper": {"parents": ["Paper"]},
            "Accepted_Paper": {"parents": ["Paper"], "restrictions": ["hasReview"]},
            "Camera_Ready_Paper": {"parents": ["Accepted_Paper"]},
            "Workshop_Paper": {"parents": ["Paper"]},
            "Review": {"parents": ["Document"]},
            "Proceedings": {"parents": ["Document"]},
            "Web_Site": {},
        },
        "object_properties": {
            "writtenBy": ("Paper", "Paper_Author"),
            "hasReview": ("Paper", "Review"),
            "reviewWrittenBy": ("Review", "Possible_Reviewer"),
            "partOfEvent": ("Session", "Scientific_Event"),
            "hasWebSite": ("Scientific_Event", "Web_Site"),
            "publishedIn": ("Paper", "Proceedings"),
        },
        "datatype_properties": {
            "hasTitle": "Document",
            "volumeNumber": "Proceedings",
        },
        "concepts": {
            "person": "Person",
            "participant": "Conference_Participant",
            "author": "Paper_Author",
            "academic": "Academic",
            "reviewer": "Possible_Reviewer",
            "pc_member": "PC_Member",
            "pc_chair": "PC_Chair",
            "student": "Student",
            "document": "Document",
            "paper": "Paper",
            "abstract": "Abstract",
            "accepted_paper": "Accepted_Paper",
            "review": "Review",
            "conference": "Conference",
            "workshop": "Workshop",
            "event": "Event",
            "working_event": "Scientific_Event",
            "session": "Session",
            "website": "Web_Site",
            "proceedings": "Proceedings",
            "p_has_review": "hasReview",
            "p_title": "hasTitle",
        },
    },
    "iasted": {
        "iri": "http://iasted",
        "classes": {
            "Person": {},
            "Author": {"parents": ["Person"], "restrictions": ["writes"]},
            "Speaker": {"parents": ["Person"], "restrictions": ["presents"]},
            "Delegate": {"parents": ["Person"]},
            "Session_chair": {"parents": ["Person"]},
            "Student": {"parents": ["Person"]},
            "Document": {},
            "Submission": {"parents": ["Document"]},
            "Money": {},
            "Fee": {"parents": ["Money"]},
            "Registration_fee": {"parents": ["Fee"]},
            "Conference_activity": {},
            "Technical_session": {"parents": ["Conference_activity"]},
            "Social_activity": {"parents": ["Conference_activity"]},
            "Presentation": {"parents": ["Conference_activity"]},
            "Paper_presentation": {"parents": ["Presentation"]},
            "City": {},
            "Hotel": {},
            "Deadline": {},
        },
        "object_properties": {
            "writes": ("Author", "Submission"),
            "presents": ("Speaker", "Presentation"),
            "pays": ("Delegate", "Registration_fee"),
            "attends": ("Delegate", "Conference_activity"),
            "stays_at": ("Delegate", "Hotel"),
            "located_in": ("Hotel", "City"),
            "takes_place_in": ("Conference_activity", "City"),
            "chairs": ("Session_chair", "Technical_session"),
        },
        "datatype_properties": {
            "full_name": "Person",
            "name_of_the_paper": "Submission",
            "fee_amount": "Fee",
        },
        "concepts": {
            "person": "Person",
            "participant": "Delegate",
            "author": "Author",
            "speaker": "Speaker",
            "session_chair": "Session_chair",
            "student": "Student",
            "document": "Document",
            "paper": "Submission",
            "fee": "Registration_fee",
            "deadline": "Deadline",
            "session": "Technical_session",
            "social_event": "Social_activity",
            "talk": "Presentation",
            "place": "City",
            "p_write": "writes",
            "p_present": "presents",
            "p_pay": "pays",
            "p_title": "name_of_the_paper",
            "p_amount": "fee_amount",
        },
    },
    "sigkdd": {
        "iri": "http://sigkdd",
        "classes": {
            "Person": {},
            "Author": {"parents": ["Person"]},
            "Speaker": {"parents": ["Person"], "restrictions": ["presents"]},
            "Listener": {"parents": ["Person"]},
            "Organizator": {"parents": ["Person"]},
            "Program_Chair": {"parents": ["Organizator"]},
            "General_Chair": {"parents": ["Organizator"]},
            "Program_Committee_member": {"parents": ["Person"]},
            "Program_Committee": {},
            "Conference": {},
            "ACM_SIGKDD": {"parents": ["Conference"]},
            "Document": {},
            "Paper": {"parents": ["Document"]},
            "Abstract": {"parents": ["Document"]},
            "Review": {"parents": ["Document"]},
            "Award": {},
            "Best_Paper_Award": {"parents": ["Award"]},
            "Registration_fee": {},
            "Conference_hall": {},
            "Deadline": {},
            "Sponzor": {},
        },
        "object_properties": {
            "submits": ("Author", "Paper"),
            "presents": ("Speaker", "Paper"),
            "reviews": ("Program_Committee_member", "Paper"),
            "is_member_of": ("Program_Committee_member", "Program_Committee"),
            "pays": ("Listener", "Registration_fee"),
            "sponsors": ("Sponzor", "Conference"),
            "obtains": ("Author", "Award"),
        },
        "datatype_properties": {
            "has_name": "Person",
            "name_of_paper": "Paper",
            "amount": "Registration_fee",
            "date": "Deadline",
        },
        "concepts": {
            "person": "Person",
            "participant": "Listener",
            "author": "Author",
            "speaker": "Speaker",
            "pc_member": "Program_Committee_member",
            "pc_committee": "Program_Committee",
            "pc_chair": "Program_Chair",
            "document": "Document",
            "paper": "Paper",
            "abstract": "Abstract",
            "review": "Review",
            "conference": "Conference",
            "fee": "Registration_fee",
            "deadline": "Deadline",
            "sponsor": "Sponzor",
            "p_submit": "submits",
            "p_present": "presents",
            "p_review": "reviews",
            "p_member_of": "is_member_of",
            "p_pay": "pays",
            "p_title": "name_of_paper",
            "p_amount": "amount",
        },
    },
}

TOY_ONTOLOGIES = {
    "confA": {
        "iri": "http://example.org/confA",
        "classes": {
            "Person": {},
            "ConferenceMember": {"parents": ["Person"]},
            "PCMember": {"parents": ["ConferenceMember"]},
            "Author": {"parents": ["Person"], "restrictions": ["writes"]},
            "Paper": {},
            "Review": {},
        },
        "object_properties": {
            "writes": ("Author", "Paper"),
            "hasReview": ("Paper", "Review"),
        },
        "datatype_properties": {
            "paperTitle": "Paper",
        },
        "concepts": {},
    },
    "confB": {
        "iri": "http://example.org/confB",
        "classes": {
            "Human": {},
            "MemberOfConference": {"parents": ["Human"]},
            "ProgramCommitteeMember": {"parents": ["MemberOfConference"]},
            "Writer": {"parents": ["Human"], "restrictions": ["authorOf"]},
            "Article": {},
            "Evaluation": {},
        },
        "object_properties": {
            "authorOf": ("Writer", "Article"),
            "hasEvaluation": ("Article", "Evaluation"),
        },
        "datatype_properties": {
            "articleTitle": "Article",
        },
        "concepts": {},
    },
}

TOY_REFERENCE = [
    ("ConferenceMember", "MemberOfConference"),
    ("PCMember", "ProgramCommitteeMember"),
    ("Author", "Writer"),
    ("Paper", "Article"),
]


def entity_iri(onto: dict, name: str) -> str:
    return f"{onto['iri']}#{name}"


def interchange_document(onto: dict) -> dict:
    entities = []
    edges = []
    for name, spec in onto["classes"].items():
        entities.append({"id": entity_iri(onto, name), "kind": "class", "label": name})
    for name, (domain, range_) in onto["object_properties"].items():
        entities.append({"id": entity_iri(onto, name), "kind": "object_property", "label": name})
    for name, domain in onto["datatype_properties"].items():
        entities.append({"id": entity_iri(onto, name), "kind": "datatype_property", "label": name})

    for name, spec in onto["classes"].items():
        src = entity_iri(onto, name)
        for parent in spec.get("parents", []):
            edges.append({"src": src, "rel": "subClassOf", "dst": entity_iri(onto, parent)})
        for equiv in spec.get("equivalents", []):
            edges.append({"src": src, "rel": "equivalentClass", "dst": entity_iri(onto, equiv)})
        for prop in spec.get("restrictions", []):
            edges.append({"src": src, "rel": "restriction", "dst": entity_iri(onto, prop)})
    for name, (domain, range_) in onto["object_properties"].items():
        src = entity_iri(onto, name)
        edges.append({"src": src, "rel": "domain", "dst": entity_iri(onto, domain)})
        if range_:
            edges.append({"src": src, "rel": "range", "dst": entity_iri(onto, range_)})
    for name, domain in onto["datatype_properties"].items():
        edges.append({"src": entity_iri(onto, name), "rel": "domain", "dst": entity_iri(onto, domain)})
    return {"ontology_iri": onto["iri"], "entities": entities, "edges": edges}


def reference_cells(onto_a: dict, onto_b: dict) -> list[dict]:
    shared = sorted(set(onto_a["concepts"]) & set(onto_b["concepts"]))
    return [
        {
            "entity1": entity_iri(onto_a, onto_a["concepts"][key]),
            "entity2": entity_iri(onto_b, onto_b["concepts"][key]),
            "relation": "=",
            "measure": 1.0,
        }
        for key in shared
    ]


def embedding_rows(onto: dict, dim: int):
    abbrev = load_abbreviations()
    stopwords = load_stopwords()
    tokens = set()
    document = interchange_document(onto)
    for entity in document["entities"]:
        tokens.update(bag_of_words(entity["label"], abbrev, stopwords))
    return [(token, hash_vector(token, dim, seed=0)) for token in sorted(tokens)]


# ----------------------------------------------------------------------
# OWL / Turtle / Alignment-format output for the corpus-prep fixtures
# ----------------------------------------------------------------------

OWL_HEADER = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xml:base={base}>
  <owl:Ontology rdf:about={iri}/>
"""


def owl_document(onto: dict) -> str:
    out = [OWL_HEADER.format(base=quoteattr(onto["iri"]), iri=quoteattr(onto["iri"]))]
    for name, spec in onto["classes"].items():
        out.append(f"  <owl:Class rdf:about={quoteattr(entity_iri(onto, name))}>")
        for parent in spec.get("parents", []):
            out.append(
                f"    <rdfs:subClassOf rdf:resource={quoteattr(entity_iri(onto, parent))}/>"
            )
        for equiv in spec.get("equivalents", []):
            out.append(
                f"    <owl:equivalentClass rdf:resource={quoteattr(entity_iri(onto, equiv))}/>"
            )
        for prop in spec.get("restrictions", []):
            out.extend(
                [
                    "    <rdfs:subClassOf>",
                    "      <owl:Restriction>",
                    f"        <owl:onProperty rdf:resource={quoteattr(entity_iri(onto, prop))}/>",
                    "        <owl:someValuesFrom rdf:resource="
                    f"{quoteattr(entity_iri(onto, onto['object_properties'][prop][1]))}/>",
                    "      </owl:Restriction>",
                    "    </rdfs:subClassOf>",
                ]
            )
        out.append("  </owl:Class>")
    for name, (domain, range_) in onto["object_properties"].items():
        out.append(f"  <owl:ObjectProperty rdf:about={quoteattr(entity_iri(onto, name))}>")
        out.append(f"    <rdfs:domain rdf:resource={quoteattr(entity_iri(onto, domain))}/>")
        if range_:
            out.append(f"    <rdfs:range rdf:resource={quoteattr(entity_iri(onto, range_))}/>")
        out.append("  </owl:ObjectProperty>")
    for name, domain in onto["datatype_properties"].items():
        out.extend(
            [
                f"  <owl:DatatypeProperty rdf:about={quoteattr(entity_iri(onto, name))}>",
                f"    <rdfs:domain rdf:resource={quoteattr(entity_iri(onto, domain))}/>",
                '    <rdfs:range rdf:resource="http://www.w3.org/2001/XMLSchema#string"/>',
                "  </owl:DatatypeProperty>",
            ]
        )
    out.append("</rdf:RDF>\n")
    return "\n".join(out)


def turtle_document(onto: dict) -> str:
    """Turtle rendering of the same ontology (subset: prefixes, a, nested
    restriction blank nodes)."""
    out = [
        "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .",
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .",
        f"@prefix : <{onto['iri']}#> .",
        "",
        f"<{onto['iri']}> a owl:Ontology .",
        "",
    ]
    for name, spec in onto["classes"].items():
        lines = [f":{name} a owl:Class"]
        for parent in spec.get("parents", []):
            lines.append(f"    rdfs:subClassOf :{parent}")
        for equiv in spec.get("equivalents", []):
            lines.append(f"    owl:equivalentClass :{equiv}")
        for prop in spec.get("restrictions", []):
            filler = onto["object_properties"][prop][1]
            lines.append(
                "    rdfs:subClassOf [ a owl:Restriction ; "
                f"owl:onProperty :{prop} ; owl:someValuesFrom :{filler} ]"
            )
        out.append(" ;\n".join(lines) + " .")
    for name, (domain, range_) in onto["object_properties"].items():
        lines = [f":{name} a owl:ObjectProperty", f"    rdfs:domain :{domain}"]
        if range_:
            lines.append(f"    rdfs:range :{range_}")
        out.append(" ;\n".join(lines) + " .")
    for name, domain in onto["datatype_properties"].items():
        out.append(
            f":{name} a owl:DatatypeProperty ;\n    rdfs:domain :{domain} ;\n"
            "    rdfs:range <http://www.w3.org/2001/XMLSchema#string> ."
        )
    return "\n".join(out) + "\n"


def alignment_rdf(cells: list[dict], onto1: str, onto2: str) -> str:
    lines = [
        '<?xml version="1.0" encoding="utf-8"?>',
        '<rdf:RDF xmlns="http://knowledgeweb.semanticweb.org/heterogeneity/alignment"',
        '         xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"',
        '         xmlns:xsd="http://www.w3.org/2001/XMLSchema#">',
        "<Alignment>",
        "<xml>yes</xml>",
        "<level>0</level>",
        "<type>11</type>",
        f"<onto1>{escape(onto1)}</onto1>",
        f"<onto2>{escape(onto2)}</onto2>",
    ]
    for cell in cells:
        lines.extend(
            [
                "<map>",
                "<Cell>",
                f"  <entity1 rdf:resource={quoteattr(cell['entity1'])}/>",
                f"  <entity2 rdf:resource={quoteattr(cell['entity2'])}/>",
                "  <relation>=</relation>",
                '  <measure rdf:datatype="http://www.w3.org/2001/XMLSchema#float">1.0</measure>',
                "</Cell>",
                "</map>",
            ]
        )
    lines.extend(["</Alignment>", "</rdf:RDF>", ""])
    return "\n".join(lines)


def write_json(path: Path, payload) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


def main() -> None:
    fixtures = ROOT / "fixtures"
    prep_fixtures = ROOT / "corpus_prep" / "tests" / "fixtures"

    # toy pair
    toy = fixtures / "toy"
    for name, onto in TOY_ONTOLOGIES.items():
        write_json(toy / f"{name}.json", interchange_document(onto))
        (toy / f"{name}.emb").parent.mkdir(parents=True, exist_ok=True)
        write_embeddings(str(toy / f"{name}.emb"), TOY_DIM, embedding_rows(onto, TOY_DIM))
    a, b = TOY_ONTOLOGIES["confA"], TOY_ONTOLOGIES["confB"]
    toy_cells = [
        {
            "entity1": entity_iri(a, left),
            "entity2": entity_iri(b, right),
            "relation": "=",
            "measure": 1.0,
        }
        for left, right in TOY_REFERENCE
    ]
    write_json(toy / "reference.json", toy_cells)

    # conference track
    conf = fixtures / "conference"
    for name, onto in CONFERENCE_ONTOLOGIES.items():
        write_json(conf / f"{name}.json", interchange_document(onto))
        (conf / "emb").mkdir(parents=True, exist_ok=True)
        write_embeddings(
            str(conf / "emb" / f"{name}.emb"), CONFERENCE_DIM, embedding_rows(onto, CONFERENCE_DIM)
        )
    names = list(CONFERENCE_ONTOLOGIES)
    for name_a, name_b in combinations(names, 2):
        onto_a, onto_b = CONFERENCE_ONTOLOGIES[name_a], CONFERENCE_ONTOLOGIES[name_b]
        cells = reference_cells(onto_a, onto_b)
        write_json(conf / "refs" / f"{name_a}-{name_b}.json", cells)

    # corpus-prep (secondary) fixtures: OWL, one Turtle duplicate, reference RDF
    owl_dir = prep_fixtures / "owl"
    owl_dir.mkdir(parents=True, exist_ok=True)
    for name, onto in CONFERENCE_ONTOLOGIES.items():
        (owl_dir / f"{name}.owl").write_text(owl_document(onto), encoding="utf-8")
    (owl_dir / "confOf.ttl").write_text(
        turtle_document(CONFERENCE_ONTOLOGIES["confOf"]), encoding="utf-8"
    )
    for name, onto in TOY_ONTOLOGIES.items():
        (owl_dir / f"{name}.owl").write_text(owl_document(onto), encoding="utf-8")
    refs_dir = prep_fixtures / "refs"
    refs_dir.mkdir(parents=True, exist_ok=True)
    for name_a, name_b in combinations(names, 2):
        onto_a, onto_b = CONFERENCE_ONTOLOGIES[name_a], CONFERENCE_ONTOLOGIES[name_b]
        cells = reference_cells(onto_a, onto_b)
        (refs_dir / f"{name_a}-{name_b}.rdf").write_text(
            alignment_rdf(cells, onto_a["iri"], onto_b["iri"]), encoding="utf-8"
        )

    total_refs = sum(
        len(reference_cells(CONFERENCE_ONTOLOGIES[x], CONFERENCE_ONTOLOGIES[y]))
        for x, y in combinations(names, 2)
    )
    print(f"wrote fixtures: {len(names)} conference ontologies, 21 reference files "
          f"({total_refs} cells), toy pair")


if __name__ == "__main__":
    main()
