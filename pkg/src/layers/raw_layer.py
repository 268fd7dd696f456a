"""
RAW LAYER - Camada de Ingestão de Dados
Responsável por ler/escrever arquivos de instância e de código (JSON) e
convertê-los nos modelos de domínio
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from pydantic import ValidationError

from src.errors import ParseError
from src.models.code import IndexCode
from src.models.instance import Instance, InstanceFile, parse_symbol_name, symbol_name


def _format_loc(loc: Sequence[Any]) -> str:
    """Converte o loc do pydantic ('clients', 0, 'has') em 'clients[0].has'"""
    out = ""
    for part in loc:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)
    return out or "<raiz>"


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, location=f"linha {e.lineno}, coluna {e.colno}") from e


def _symbol_ids(names: List[str], location: str) -> frozenset:
    ids = set()
    for idx, name in enumerate(names):
        try:
            ids.add(parse_symbol_name(name))
        except ValueError as e:
            raise ParseError(str(e), location=f"{location}[{idx}]") from e
    return frozenset(ids)


class RawLayer:
    """Converte texto JSON em Instance/IndexCode e vice-versa"""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def parse_instance(self, text: str) -> Instance:
        """
        Faz o parsing de um documento de instância

        Args:
            text: Conteúdo JSON do arquivo

        Returns:
            Instance (não validada; use TrustedLayer.validate)

        Raises:
            ParseError: Com a linha/campo do problema
        """
        data = _load_json(text)
        try:
            doc = InstanceFile.model_validate(data)
        except ValidationError as e:
            first = e.errors()[0]
            message = "campo desconhecido" if first["type"] == "extra_forbidden" else first["msg"]
            raise ParseError(message, location=_format_loc(first["loc"])) from e

        if doc.n != len(doc.clients):
            raise ParseError(f"n={doc.n} mas {len(doc.clients)} clientes listados", location="n")

        has = []
        want = []
        for i, client in enumerate(doc.clients):
            has.append(_symbol_ids(client.has, f"clients[{i}].has"))
            want.append(_symbol_ids(client.want, f"clients[{i}].want"))

        return Instance(
            n=doc.n,
            k=doc.k,
            has=tuple(has),
            want=tuple(want),
            payload_size_bytes=doc.payload_size_bytes,
        )

    def serialize_instance(self, inst: Instance) -> str:
        """
        Gera o documento JSON canônico de uma instância

        Args:
            inst: Instância

        Returns:
            Texto JSON (símbolos ordenados, nomes 1-based)
        """
        doc = {
            "n": inst.n,
            "k": inst.k,
            "payload_size_bytes": inst.payload_size_bytes,
            "clients": [
                {
                    "has": [symbol_name(s) for s in sorted(h)],
                    "want": [symbol_name(s) for s in sorted(w)],
                }
                for h, w in zip(inst.has, inst.want)
            ],
        }
        return json.dumps(doc, ensure_ascii=False, indent=4) + "\n"

    def parse_code(self, text: str) -> IndexCode:
        """
        Faz o parsing de um arquivo de código: [["p1","p2"],["p3"]]

        Args:
            text: Conteúdo JSON

        Returns:
            IndexCode na ordem do arquivo
        """
        data = _load_json(text)
        if not isinstance(data, list):
            raise ParseError("esperado um array de transmissões", location="<raiz>")
        supports = []
        for t, entry in enumerate(data):
            if not isinstance(entry, list) or not entry:
                raise ParseError("transmissão deve ser um array não vazio", location=f"[{t}]")
            supports.append(_symbol_ids(entry, f"[{t}]"))
        return IndexCode.from_supports(supports)

    def serialize_code(self, code: IndexCode) -> str:
        """Gera o JSON do código, uma transmissão por linha"""
        rows = [
            json.dumps([symbol_name(s) for s in sorted(t.support)])
            for t in code.transmissions
        ]
        if not rows:
            return "[]\n"
        return "[\n    " + ",\n    ".join(rows) + "\n]\n"

    def load_instance(self, file_path: str) -> Instance:
        """Lê um arquivo de instância do disco"""
        text = Path(file_path).read_text(encoding="utf-8")
        return self.parse_instance(text)

    def save_instance(self, inst: Instance, output_path: str) -> None:
        """Salva a instância em JSON (cria o diretório se preciso)"""
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        Path(output_path).write_text(self.serialize_instance(inst), encoding="utf-8")

    def load_code(self, file_path: str) -> IndexCode:
        text = Path(file_path).read_text(encoding="utf-8")
        return self.parse_code(text)

    def save_code(self, code: IndexCode, output_path: str) -> None:
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        Path(output_path).write_text(self.serialize_code(code), encoding="utf-8")

    def execute(self, instance_path: str, code_path: str = None) -> Tuple[Instance, IndexCode]:
        """
        Executa a ingestão completa: instância e, opcionalmente, código

        Args:
            instance_path: Caminho do arquivo de instância
            code_path: Caminho do arquivo de código (opcional)

        Returns:
            Tupla (instância, código ou None)
        """
        if self.verbose:
            print("🔄 [RAW LAYER] Lendo arquivos de entrada...")

        inst = self.load_instance(instance_path)
        code = self.load_code(code_path) if code_path else None

        if self.verbose:
            print(f"✅ [RAW LAYER] Instância carregada: n={inst.n}, k={inst.k}")
            if code is not None:
                print(f"   📦 Código carregado: ℓ={code.ell}")

        return inst, code


# Funções de conveniência para uso direto
def parse_instance(text: str) -> Instance:
    """Parsing de um documento de instância"""
    return RawLayer().parse_instance(text)


def serialize_instance(inst: Instance) -> str:
    """Documento JSON canônico de uma instância"""
    return RawLayer().serialize_instance(inst)


def instance_to_dict(inst: Instance) -> Dict[str, Any]:
    """Instância como dicionário (mesmo formato do arquivo)"""
    return json.loads(serialize_instance(inst))
