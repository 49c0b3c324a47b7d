from fastapi.testclient import TestClient
from app.main import app


client = TestClient(app)

D_PAIR = {"a": [0, 3, 3], "a_prime": [0, 0, 0]}


def test_health():
    resp = client.get('/health')
    assert resp.status_code == 200
    assert resp.json()['status'] == 'ok'


def test_list_family():
    resp = client.get('/families/dd', params={'n': 2})
    assert resp.status_code == 200
    assert resp.json()[0] == {'a': [0, 0, 0, 1], 'a_prime': [0, 0, 0, 1]}
    assert len(resp.json()) == 3


def test_api_prefix():
    assert client.get('/api/families/c', params={'n': 2}).json() == client.get('/families/c', params={'n': 2}).json()


def test_unknown_family():
    assert client.get('/families/zz', params={'n': 2}).status_code == 404


def test_family_cap():
    resp = client.get('/families/c', params={'n': 13})
    assert resp.status_code == 400
    assert resp.json()['error'] == 'CapExceeded'


def test_member():
    resp = client.post('/families/dd/member', json={'a': [0, 0, 1], 'a_prime': [0, 0, 2]})
    assert resp.status_code == 200
    assert resp.json()['member'] is False


def test_invalid_pair():
    resp = client.post('/families/c/member', json={'a': [0, 1, 0], 'a_prime': [0, 0, 0]})
    assert resp.status_code == 422


def test_decompose_step():
    resp = client.post('/decomp/d/step', json=D_PAIR)
    assert resp.status_code == 200
    data = resp.json()
    assert data['kind'] == 'split'
    assert (data['m'], data['m_prime']) == (4, 2)
    assert data['right'] == {'a': [0, 1, 1], 'a_prime': [0, 0, 0]}


def test_decompose_not_normalized():
    resp = client.post('/decomp/a/step', json={'a': [1, 1], 'a_prime': [0, 0]})
    assert resp.status_code == 422
    assert resp.json()['error'] == 'NotNormalized'


def test_atomize():
    resp = client.post('/decomp/d/atomize', json=D_PAIR)
    assert resp.status_code == 200
    assert [leaf['family'] for leaf in resp.json()] == ['d1', 'd1']


def test_springer_set():
    resp = client.get('/springer/d/4', params={'side': 'algebra'})
    assert resp.status_code == 200
    assert len(resp.json()['labels']) == 12


def test_tau():
    data = client.get('/springer/c/3/tau').json()
    assert data['injective'] is True
    assert len(data['unhit']) == 1


def test_counts():
    rows = client.get('/springer/c/counts', params={'max_n': 3}).json()
    assert [(r['n'], r['card_group'], r['card_algebra'], r['difference']) for r in rows] == [(2, 5, 5, 0), (3, 9, 10, 1)]


def test_exceptional():
    data = client.get('/springer/exceptional/e7/2').json()
    assert data['added'] == [{'name': "84'_a", 'b_value': 15}]
    assert client.get('/springer/exceptional/g2/7').status_code == 404


def test_verify_closure():
    resp = client.get('/verify/closure', params={'rule': 'b+b=b', 'max_n': 4})
    assert resp.status_code == 200
    assert resp.json()['pass'] is False
    assert client.get('/verify/closure', params={'rule': 'b+b'}).status_code == 400
