#include "support/fixtures.hpp"

#include <stdexcept>

#include "kgqr/ntriples.hpp"
#include "kgqr/query_parser.hpp"

namespace kgqr::testsup {

namespace {
// plain literals: these helpers run from static initializers in test files
constexpr const char* kKg = "http://example.org/kg/";
constexpr const char* kDbo = "http://dbpedia.example/ontology/";
constexpr const char* kDbr = "http://dbpedia.example/resource/";
constexpr const char* kUb = "http://uni.example/onto#";
constexpr const char* kUinst = "http://uni.example/data#";
}  // namespace

Term kg(const std::string& local) { return Term::iri(kKg + local); }
Term dbo(const std::string& local) { return Term::iri(kDbo + local); }
Term dbr(const std::string& local) { return Term::iri(kDbr + local); }
Term ub(const std::string& local) { return Term::iri(kUb + local); }
Term uinst(const std::string& local) { return Term::iri(kUinst + local); }

Term rdf_type_term() { return Term::iri(std::string(vocab::rdf_type)); }

std::string fixture_path(const std::string& name) {
    return std::string(KGQR_FIXTURE_DIR) + "/" + name;
}

std::vector<Triple> table1_triples() {
    return load_ntriples_files({fixture_path("fix_table1.nt")});
}

std::vector<Triple> scorsese_triples() {
    return load_ntriples_files({fixture_path("fix_scorsese.nt")});
}

Graph table1_graph(bool closed) {
    Graph g = build_graph(table1_triples());
    return closed ? compute_closure(g) : g;
}

Graph scorsese_graph(bool closed) {
    Graph g = build_graph(scorsese_triples());
    return closed ? compute_closure(g) : g;
}

BGPQuery director_query() {
    std::string text = "PREFIX : <" + std::string(kKg) + ">\n" +
                       "SELECT DISTINCT ?s WHERE { ?s :director "
                       ":Martin_Scorsese . }\n";
    return parse_query(text);
}

Graph ten_entity_graph() {
    std::vector<Triple> ts;
    const Term p = kg("p"), q = kg("q"), r = kg("r");
    const Term shared = kg("shared");
    // fact (p, shared) held by e0 and e1; shared is an object 4 times
    ts.push_back({kg("e0"), p, shared});
    ts.push_back({kg("e1"), p, shared});
    ts.push_back({kg("e2"), q, shared});
    ts.push_back({kg("e3"), q, shared});
    for (int i = 4; i < 10; ++i)
        ts.push_back(
            {kg("e" + std::to_string(i)), r, kg("o" + std::to_string(i))});
    return compute_closure(build_graph(std::move(ts)));
}

Graph ffc_graph() {
    std::vector<Triple> ts;
    const Term type = rdf_type_term();
    const Term ffc = dbr("Francis_Ford_Coppola");
    const Term detroit = dbr("Detroit"), michigan = dbr("Michigan");
    const Term producer = dbr("Film_Producer"), writer = dbr("Screenwriter");

    ts.push_back({ffc, dbo("birthPlace"), detroit});
    ts.push_back({ffc, dbo("birthPlace"), michigan});
    ts.push_back({ffc, dbo("occupation"), producer});
    ts.push_back({ffc, dbo("occupation"), writer});

    // object popularity / per-fact entity counts:
    //   (birthPlace, Detroit)  held by 2, Detroit as object 4x
    //   (birthPlace, Michigan) held by 2, Michigan 3x
    //   (occupation, Producer) held by 2, Producer 3x
    //   (occupation, Writer)   held by 2, Writer 2x
    ts.push_back({dbr("Person1"), dbo("birthPlace"), detroit});
    ts.push_back({dbr("Person2"), dbo("livesIn"), detroit});
    ts.push_back({dbr("Person3"), dbo("diedIn"), detroit});
    ts.push_back({dbr("Person2"), dbo("birthPlace"), michigan});
    ts.push_back({dbr("Person4"), dbo("livesIn"), michigan});
    ts.push_back({dbr("Person3"), dbo("occupation"), producer});
    ts.push_back({dbr("Person5"), dbo("admires"), producer});
    ts.push_back({dbr("Person4"), dbo("occupation"), writer});

    ts.push_back({detroit, type, dbo("Settlement")});
    ts.push_back({michigan, type, dbo("Settlement")});
    ts.push_back({producer, type, dbo("PersonFunction")});
    ts.push_back({writer, type, dbo("PersonFunction")});
    ts.push_back({ffc, type, dbo("Person")});
    for (int i = 1; i <= 5; ++i)
        ts.push_back({dbr("Person" + std::to_string(i)), type, dbo("Person")});

    ts.push_back({dbr("Tetro"), dbo("director"), ffc});
    ts.push_back({dbr("The_Conversation"), dbo("director"), ffc});
    ts.push_back({dbr("Tetro"), type, dbo("Film")});
    ts.push_back({dbr("The_Conversation"), type, dbo("Film")});
    ts.push_back({dbo("Film"), Term::iri(std::string(vocab::rdfs_subclassof)),
                  dbo("Work")});

    return compute_closure(build_graph(std::move(ts)));
}

namespace {

void add_lubm_schema(std::vector<Triple>& ts) {
    const Term sc = Term::iri(std::string(vocab::rdfs_subclassof));
    const Term sp = Term::iri(std::string(vocab::rdfs_subpropertyof));
    auto cls = [&](const char* a, const char* b) {
        ts.push_back({ub(a), sc, ub(b)});
    };
    auto prop = [&](const char* a, const char* b) {
        ts.push_back({ub(a), sp, ub(b)});
    };
    cls("Lecturer", "Faculty");
    cls("PostDoc", "Faculty");
    cls("Professor", "Faculty");
    cls("FullProfessor", "Professor");
    cls("AssociateProfessor", "Professor");
    cls("AssistantProfessor", "Professor");
    cls("VisitingProfessor", "Professor");
    cls("Faculty", "Employee");
    cls("Employee", "Person");
    cls("GraduateStudent", "Student");
    cls("UndergraduateStudent", "Student");
    cls("Student", "Person");
    cls("Department", "Organization");
    cls("University", "Organization");
    cls("ResearchGroup", "Organization");
    cls("GraduateCourse", "Course");
    cls("Course", "Work");
    prop("headOf", "worksFor");
    prop("worksFor", "memberOf");
    prop("doctoralDegreeFrom", "degreeFrom");
    prop("mastersDegreeFrom", "degreeFrom");
    prop("undergraduateDegreeFrom", "degreeFrom");
}

}  // namespace

std::vector<Triple> lubm_triples() {
    std::vector<Triple> ts;
    const Term type = rdf_type_term();
    constexpr std::size_t kTotal = 2000;
    constexpr int kUniversities = 2;
    constexpr int kDepartments = 8;  // per university
    constexpr int kProfessors = 4;   // per department
    constexpr int kLecturers = 3;    // per department, none in d0 of u0
    constexpr int kCourses = 5;      // per department
    constexpr int kStudents = 8;     // per department

    add_lubm_schema(ts);

    const char* professor_kinds[3] = {"FullProfessor", "AssociateProfessor",
                                      "AssistantProfessor"};

    std::vector<Term> universities;
    for (int u = 0; u < kUniversities; ++u) {
        Term univ = uinst("University" + std::to_string(u));
        ts.push_back({univ, type, ub("University")});
        universities.push_back(univ);
    }

    int research = 0;
    for (int u = 0; u < kUniversities; ++u) {
        for (int d = 0; d < kDepartments; ++d) {
            const std::string dept_id = "Department" + std::to_string(d) +
                                        ".University" + std::to_string(u);
            const Term dept = uinst(dept_id);
            ts.push_back({dept, type, ub("Department")});
            ts.push_back({dept, ub("subOrganizationOf"), universities[u]});
            ts.push_back({dept, ub("name"),
                          Term::literal("Department" + std::to_string(d))});

            std::vector<Term> courses;
            for (int c = 0; c < kCourses; ++c) {
                Term course =
                    uinst("Course" + std::to_string(c) + "." + dept_id);
                ts.push_back({course, type,
                              c % 2 ? ub("GraduateCourse") : ub("Course")});
                ts.push_back({course, ub("name"),
                              Term::literal("Course" + std::to_string(c))});
                courses.push_back(course);
            }

            std::vector<Term> professors;
            for (int p = 0; p < kProfessors; ++p) {
                Term prof =
                    uinst("Professor" + std::to_string(p) + "." + dept_id);
                ts.push_back({prof, type, ub(professor_kinds[p % 3])});
                ts.push_back({prof, ub("worksFor"), dept});
                ts.push_back({prof, ub("doctoralDegreeFrom"),
                              universities[(u + p) % kUniversities]});
                ts.push_back({prof, ub("researchInterest"),
                              Term::literal("Research" +
                                            std::to_string(research++ % 30))});
                ts.push_back({prof, ub("name"),
                              Term::literal("Professor" + std::to_string(p))});
                ts.push_back({prof, ub("teacherOf"),
                              courses[static_cast<std::size_t>(p) %
                                      courses.size()]});
                if (p == 0) ts.push_back({prof, ub("headOf"), dept});
                professors.push_back(prof);
            }

            const bool no_lecturers = (u == 0 && d == 0);
            if (!no_lecturers) {
                for (int l = 0; l < kLecturers; ++l) {
                    Term lect =
                        uinst("Lecturer" + std::to_string(l) + "." + dept_id);
                    ts.push_back({lect, type, ub("Lecturer")});
                    ts.push_back({lect, ub("worksFor"), dept});
                    ts.push_back(
                        {lect, ub("researchInterest"),
                         Term::literal("Research" +
                                       std::to_string(research++ % 30))});
                    ts.push_back(
                        {lect, ub("name"),
                         Term::literal("Lecturer" + std::to_string(l))});
                }
            }

            for (int s = 0; s < kStudents; ++s) {
                Term student =
                    uinst("Student" + std::to_string(s) + "." + dept_id);
                ts.push_back({student, type, ub("GraduateStudent")});
                ts.push_back({student, ub("takesCourse"),
                              courses[static_cast<std::size_t>(s) %
                                      courses.size()]});
                ts.push_back({student, ub("advisor"),
                              professors[static_cast<std::size_t>(s) %
                                         professors.size()]});
                ts.push_back({student, ub("undergraduateDegreeFrom"),
                              universities[(u + s) % kUniversities]});
                ts.push_back({student, ub("name"),
                              Term::literal("Student" + std::to_string(s))});
            }
        }
    }

    if (ts.size() > kTotal)
        throw std::logic_error("fixture overflow: " +
                               std::to_string(ts.size()));
    int filler = 0;
    while (ts.size() < kTotal) {
        ts.push_back({uinst("Aux" + std::to_string(filler)), ub("note"),
                      Term::literal("aux" + std::to_string(filler))});
        ++filler;
    }
    return ts;
}

Graph lubm_graph() { return compute_closure(build_graph(lubm_triples())); }

}  // namespace kgqr::testsup
