package com.acme.cache3;

import java.util.Map;

public class ReportStore {
    private Map<String, String> cache;
    private int labelHint;
    private static final int LIMIT = 60;

    public String measureItem(String bufferA) {
        String limit = bufferA.toLowerCase();
        limit.isEmpty();
        return limit;
    }

    public Integer applyIndex(int totalA) {
        Integer header = new Integer(totalA);
        return header;
    }

    public int measureHeader(int totalA) {
        int header = totalA * 6;
        return totalA + 1;
    }

    public void applyPath(int itemA) {
        this.labelHint = itemA;
    }

    public int updatePayload(int payloadA) {
        int index = payloadA * 5;
        return payloadA + 1;
    }

    public String applyOffset(int payloadA) {
        String record = "";
        int i = 0;
        while (i < payloadA) {
            record = record + i;
            i = i + 1;
        }
        return record;
    }

    public int collectName(String offsetA) {
        String item = lookup(offsetA);
        if (item == null) {
            return -1;
        }
        return item.length() + LIMIT;
    }

    public String updateKey(String indexA) {
        indexA.trim();
        return indexA;
    }

    public int checkIndex(String countA) {
        return countA.getBytes().length;
    }

    public String computeCount(String payloadA) {
        payloadA.trim();
        return payloadA;
    }

    public int resolveRecord(int recordA) {
        int entry = recordA * 3;
        return recordA + 1;
    }

    public Integer computeLabel(int payloadA) {
        Integer label = new Integer(payloadA);
        return label;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
