"""Embedded part-of-speech lexicon.

Word lists below are base forms; regular noun plurals and verb inflections
are generated at import time so the shipped lexicon stays readable. Wrong
generated strings are harmless dead entries (real surface forms that are
missing fall through to the suffix rules, and a noun/verb mix-up does not
change the content-word count the features care about). What must be right
is the closed-class coverage: determiners, pronouns, prepositions,
conjunctions, and auxiliaries decide whether a token counts as content.
"""

from __future__ import annotations

NOUN = "noun"
VERB = "verb"
ADJ = "adj"
ADV = "adv"
DET = "det"
PRON = "pron"
PREP = "prep"
CONJ = "conj"
NUM = "num"
OTHER = "other"

CONTENT_TAGS: frozenset[str] = frozenset({NOUN, VERB, ADJ, ADV})

DETERMINERS = """
the a an this that these those each every either neither some any no all
both few many much most other another such what which whose several enough
half
""".split()

PRONOUNS = """
i me my mine myself we us our ours ourselves you your yours yourself
yourselves he him his himself she her hers herself it its itself they them
their theirs themselves who whom one ones someone somebody anyone anybody
everyone everybody nobody something anything everything nothing whoever
whatever whichever
""".split()

PREPOSITIONS = """
of in to for with on at from by about as into like through after over
between out against during without before under around among above below
near off up down across behind beyond within along despite toward towards
upon via per amid beside besides except inside outside past since until
till onto unto throughout underneath versus aboard alongside atop
""".split()

CONJUNCTIONS = """
and but or nor so yet because although though while whereas if unless
whether when whenever wherever once than lest
""".split()

# Auxiliaries and modals; tagged as verbs, matching the usual VB* treatment.
AUXILIARIES = """
am is are was were be been being have has had having do does did doing
will would shall should can could may might must ought need dare
""".split()

ADVERBS = """
very also often never always now then here there well too just still
already soon again perhaps maybe quite rather almost away back even ever
far however instead least meanwhile moreover nevertheless nonetheless
today tomorrow yesterday together twice usually sometimes somewhat
somewhere anywhere everywhere nowhere indeed thus therefore hence
otherwise really nearly early else seldom rarely frequently recently
currently finally eventually suddenly immediately later ago yes not
probably possibly certainly clearly simply exactly especially particularly
generally mostly largely merely quickly slowly carefully easily hardly
barely scarcely abroad ahead aloud apart forward backward upstairs
downstairs ahead anyway anymore meantime nowadays overseas sometime
elsewhere halfway likewise nonetheless furthermore
""".split()

ADJECTIVES = """
good new first second third last long great little own old right big high
different small large next young important public bad same able free sure
low late hard major better best strong possible whole real certain current
recent likely special difficult available economic political national
international local social serious ready simple clear short easy final
main full similar single true wrong common poor natural significant nice
huge popular traditional cultural financial medical legal federal foreign
military human personal private professional religious environmental
physical chemical digital global regional annual weekly monthly chief
senior junior top former entire extra additional average basic brief broad
busy cheap clean close cold cool dark dead deep dirty dry due empty equal
exact fair fast fat fine firm flat fresh front future general golden grand
green grey gray happy healthy heavy hot ill joint key kind lean light loud
lucky mad mild modern moral narrow nearby neat nervous normal odd official
open original outer perfect pink plain pleasant positive potential
powerful practical present previous prime prior proper proud pure quick
quiet rare raw red rich rough round royal rural sad safe secret secure
severe sharp sick silent silver slight slow smart smooth soft solid sorry
southern northern eastern western spare square stable steady steep stiff
straight strange strict sudden sweet tall thick thin tight tiny tired
total tough typical ugly unable unique united unknown unlikely upper urban
useful usual vast vital warm weak wealthy wet white wide wild wise wooden
yellow blue black brown orange purple violent worse worst elder eldest
inner utter sheer daily
""".split()

NOUNS = """
time year people way day man men woman women thing child children world
life hand part eye place week case point government company number group
problem fact money month lot study book job word business issue side head
house service friend father mother power hour game line end member law car
city community name president team minute idea body information parent
face others level office door health person art war history party result
morning reason research girl boy guy moment air teacher force education
foot feet policy process music market sense nation college interest death
experience effect class field development role student area story industry
media bank court board oil situation cost price percent tax analyst share
stock firm investor trade economy growth profit sale quarter report
statement chairman executive director officer agency official department
minister leader spokesman campaign election voter congress senate
committee bill budget deficit program project system computer technology
science energy environment water land sea river mountain storm wind rain
snow weather climate season summer winter spring autumn fire flood
earthquake disaster emergency crew resident neighborhood street road
bridge building school hospital church station airport train plane ship
truck driver passenger police officer crime trial judge jury lawyer prison
sentence victim witness army soldier weapon attack defense security threat
peace treaty border refugee aid food crop farm farmer animal dog cat horse
bird fish tree plant flower garden village town county state country
region capital population citizen culture language religion family
marriage wedding birth baby son daughter brother sister uncle aunt cousin
doctor nurse patient disease virus drug medicine treatment surgery cancer
heart blood brain skin bone muscle diet exercise sport player coach
season match score goal win loss championship league tournament film movie
actor actress song album band concert artist painting museum theater stage
audience newspaper magazine journal article page letter message phone call
mail network website data file record evidence detail example rate level
amount total range limit average standard quality value benefit risk
chance opportunity challenge goal purpose plan strategy decision choice
option answer question request demand supply resource material product
equipment machine tool device engine fuel metal steel glass paper wood
stone gold silver dollar euro pound yen account debt loan credit fund
insurance pension salary wage income revenue expense budget
""".split()

VERB_BASES = """
say get make go know take see come think look want give use find tell ask
work seem feel try leave call need become mean keep let begin help talk
turn start show hear play run move live believe bring happen write provide
sit stand lose pay meet include continue set learn change lead understand
watch follow stop create speak read allow add spend grow open walk win
offer remember love consider appear buy wait serve die send expect build
stay fall cut reach kill remain suggest raise pass sell require report
decide pull announce argue claim vote sue file rule order plan visit cover
catch fight throw wear choose deal seek achieve act agree aim apply
approve arrest arrive assume attend avoid base beat blame block break
carry cause celebrate charge check climb collect compare complete confirm
connect contain control cook count criticize cross cry damage dance
declare defend delay deliver demand deny describe design destroy develop
discover discuss dismiss drop earn eat elect employ encourage enjoy enter
establish estimate examine exist expand explain express face fail fear
fill finish fix focus force forget form gain gather handle hate hit hold
hope hurt identify ignore imagine improve increase insist intend introduce
invest invite join jump land laugh launch lend lift link listen lock
manage mark measure mention miss name note notice obtain occur operate
oppose organize owe own pick place point prepare press prevent produce
promise protect prove publish push put question realize receive recognize
record reduce refuse reject release remove repeat replace reply represent
respond rest return reveal review ride ring rise save score search seize
select settle shake share shoot shout shut sign sing sink sleep smile
solve sound split spread spring steal stick strike struggle succeed
suffer supply support suppose survive teach tend test thank threaten
train travel treat trust understand urge value view wake warn wash welcome
wish wonder worry
""".split()

# Irregular inflections (past / participle / odd plurals) listed directly.
IRREGULAR_VERB_FORMS = """
said got gotten made went gone knew known took taken saw seen came thought
gave given found told felt left kept began begun heard ran brought wrote
written sat stood lost paid met led understood spoke spoken grew grown won
bought built fell fallen sent spent sold chose chosen caught fought threw
thrown wore worn dealt sought meant became held drew drawn drove driven
ate eaten flew flown forgot forgotten froze frozen hid hidden lay lain
laid lent rose risen rode ridden rang rung shook shaken shone shot sang
sung sank sunk slept slid sprang stole stolen stuck stung swam swum swore
sworn taught tore torn woke woken beat beaten broke broken struck sprung
arose arisen bore borne bound bled blew blown burst clung crept dug dove
fed fled flung forbade forbidden forgave forgiven ground hung knelt lit
overcame oversaw rebuilt sped spun strove swept swung undertook withdrew
wound wrung
""".split()

_VOWELS = "aeiou"


def _pluralize(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    return noun + "s"


def _verb_forms(base: str) -> list[str]:
    forms = [_pluralize(base)]  # third person singular shares plural rules
    if base.endswith("e") and not base.endswith("ee"):
        forms.append(base[:-1] + "ing")
        forms.append(base + "d")
    elif base.endswith("y") and len(base) > 1 and base[-2] not in _VOWELS:
        forms.append(base + "ing")
        forms.append(base[:-1] + "ied")
    else:
        stem = base
        # single-syllable CVC endings double the final consonant
        if (
            len(base) >= 3
            and base[-1] not in _VOWELS + "wxy"
            and base[-2] in _VOWELS
            and base[-3] not in _VOWELS
        ):
            stem = base + base[-1]
        forms.append(stem + "ing")
        forms.append(stem + "ed")
    return forms


def build_lexicon() -> dict[str, str]:
    """Assemble the token -> tag mapping. Later groups win on conflicts."""
    lexicon: dict[str, str] = {}
    for noun in NOUNS:
        lexicon[noun] = NOUN
        lexicon[_pluralize(noun)] = NOUN
    for base in VERB_BASES:
        lexicon[base] = VERB
        for form in _verb_forms(base):
            lexicon[form] = VERB
    for form in IRREGULAR_VERB_FORMS:
        lexicon[form] = VERB
    for adj in ADJECTIVES:
        lexicon[adj] = ADJ
    for adv in ADVERBS:
        lexicon[adv] = ADV
    for word in AUXILIARIES:
        lexicon[word] = VERB
    for word in DETERMINERS:
        lexicon[word] = DET
    for word in PRONOUNS:
        lexicon[word] = PRON
    for word in PREPOSITIONS:
        lexicon[word] = PREP
    for word in CONJUNCTIONS:
        lexicon[word] = CONJ
    return lexicon


# Ordered suffix rules, applied after lexicon lookup; first match wins.
SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("ly", ADV),
    ("tion", NOUN),
    ("sion", NOUN),
    ("ment", NOUN),
    ("ness", NOUN),
    ("ity", NOUN),
    ("ism", NOUN),
    ("ance", NOUN),
    ("ence", NOUN),
    ("ship", NOUN),
    ("hood", NOUN),
    ("ize", VERB),
    ("ise", VERB),
    ("ify", VERB),
    ("ing", VERB),
    ("ous", ADJ),
    ("ful", ADJ),
    ("less", ADJ),
    ("able", ADJ),
    ("ible", ADJ),
    ("ive", ADJ),
    ("ish", ADJ),
    ("ic", ADJ),
    ("al", ADJ),
    ("est", ADJ),
    ("ed", VERB),
)
