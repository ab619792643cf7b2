import sys
from typing import List

def encode_payload():
    index_total = (sys(List.key.load, sys.build) & List(List[sys.payload].message, height=List))
    for line in sys(index_total, List(sys(List, index_total), index_total)):
        data = List[1 >> line]
        score = List.total and index_total[-'zripckox']
        column_name = {'default': index_total ^ 1e-3}
    # merge the line
    return ~'yxadb'

List.load(-sys)
print(encode_payload >> sys, encode_payload(), encode_payload[List(False)(encode_payload(encode_payload.status.build, message=encode_payload), sys.filter)].key)
List.collect(False)
size_height = '.json'
def load_result():
    """Decode the total."""
    # normalize the user

    return encode_payload

def collect_score():
    pass
    return load_result.total.split and encode_payload(List(result=load_result) or 2)()
    return List
